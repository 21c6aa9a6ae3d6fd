#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hamrel/bigint.hpp"
#include "hamrel/relpoly.hpp"

namespace hamrel {

// Exact sign analysis of reliability-polynomial differences on (0,1):
// Sturm-sequence root isolation over the rationals. No floating point.

enum class CompareOutcome { FirstDominates, SecondDominates, Equal, Crossing };

struct CrossingInterval {
  Rational lo, hi;  // open interval inside (0,1), one odd-multiplicity root
};

struct ComparisonVerdict {
  CompareOutcome outcome = CompareOutcome::Equal;
  std::vector<CrossingInterval> intervals;  // populated for Crossing
};

namespace detail {

using IPoly = std::vector<Integer>;  // ascending, trimmed

inline void trim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IPoly derivative(const IPoly& p) {
  IPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Integer(i));
  trim(d);
  return d;
}

// Divide out content; leading sign preserved.
inline void make_primitive(IPoly& p) {
  Integer g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  if (g > 1)
    for (auto& c : p) c /= g;
}

inline int sign_of(const Integer& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

// sign of p(a/b), b > 0: evaluate sum c_k a^k b^(d-k) exactly.
inline int sign_at(const IPoly& p, const Rational& x) {
  if (p.empty()) return 0;
  const Integer a = boost::multiprecision::numerator(x);
  const Integer b = boost::multiprecision::denominator(x);
  Integer acc = 0;
  Integer apow = 1;
  const std::size_t d = p.size() - 1;
  std::vector<Integer> bpow(d + 1);
  bpow[0] = 1;
  for (std::size_t i = 1; i <= d; ++i) bpow[i] = bpow[i - 1] * b;
  for (std::size_t k = 0; k <= d; ++k) {
    if (p[k] != 0) acc += p[k] * apow * bpow[d - k];
    apow *= a;
  }
  return sign_of(acc);
}

// Remainder of polynomial division, scaled to a primitive integer polynomial
// by a positive rational (signs preserved).
inline IPoly scaled_remainder(const IPoly& num, const IPoly& den) {
  std::vector<Rational> r(num.begin(), num.end());
  const std::size_t dd = den.size() - 1;
  const Rational lead = Rational(den[dd]);
  while (r.size() >= den.size()) {
    Rational q = r.back() / lead;
    const std::size_t shift = r.size() - den.size();
    for (std::size_t i = 0; i < den.size(); ++i) r[shift + i] -= q * Rational(den[i]);
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  Integer denom_lcm = 1;
  for (const auto& c : r)
    denom_lcm = boost::multiprecision::lcm(denom_lcm, boost::multiprecision::denominator(c));
  IPoly out;
  out.reserve(r.size());
  for (const auto& c : r)
    out.push_back(boost::multiprecision::numerator(c) *
                  (denom_lcm / boost::multiprecision::denominator(c)));
  make_primitive(out);
  return out;
}

inline std::vector<IPoly> sturm_chain(IPoly p) {
  make_primitive(p);
  std::vector<IPoly> chain;
  chain.push_back(p);
  IPoly d = derivative(p);
  make_primitive(d);
  if (!d.empty()) chain.push_back(d);
  while (chain.back().size() > 1) {
    IPoly rem = scaled_remainder(chain[chain.size() - 2], chain.back());
    if (rem.empty()) break;
    for (auto& c : rem) c = -c;
    chain.push_back(std::move(rem));
  }
  return chain;
}

inline int variations(const std::vector<IPoly>& chain, const Rational& x) {
  int count = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// gcd of two primitive integer polynomials (primitive, positive leading).
inline IPoly poly_gcd(IPoly a, IPoly b) {
  make_primitive(a);
  make_primitive(b);
  while (!b.empty()) {
    IPoly r = scaled_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

// Exact quotient (num divisible by den).
inline IPoly poly_divide_exact(const IPoly& num, const IPoly& den) {
  std::vector<Rational> r(num.begin(), num.end());
  std::vector<Rational> q(num.size() - den.size() + 1, Rational(0));
  const Rational lead = Rational(den.back());
  while (r.size() >= den.size()) {
    Rational coef = r.back() / lead;
    const std::size_t shift = r.size() - den.size();
    q[shift] = coef;
    for (std::size_t i = 0; i < den.size(); ++i) r[shift + i] -= coef * Rational(den[i]);
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  IPoly out;
  Integer denom_lcm = 1;
  for (const auto& c : q)
    denom_lcm = boost::multiprecision::lcm(denom_lcm, boost::multiprecision::denominator(c));
  for (const auto& c : q)
    out.push_back(boost::multiprecision::numerator(c) *
                  (denom_lcm / boost::multiprecision::denominator(c)));
  trim(out);
  make_primitive(out);
  return out;
}

inline IPoly squarefree_part(const IPoly& p) {
  IPoly g = poly_gcd(p, derivative(p));
  if (g.size() <= 1) {
    IPoly out = p;
    make_primitive(out);
    return out;
  }
  return poly_divide_exact(p, g);
}

// A rational in (lo, hi) that is not a root of s.
inline Rational split_point(const IPoly& s, const Rational& lo, const Rational& hi) {
  for (int k = 2;; ++k) {
    Rational mid = lo + (hi - lo) / k;
    if (sign_at(s, mid) != 0) return mid;
  }
}

// Isolating intervals for the distinct roots of squarefree s in (lo, hi);
// s(lo) != 0, s(hi) != 0.
inline void isolate(const std::vector<IPoly>& chain, const IPoly& s, const Rational& lo,
                    const Rational& hi, std::vector<std::pair<Rational, Rational>>& out) {
  int count = variations(chain, lo) - variations(chain, hi);
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rational mid = split_point(s, lo, hi);
  isolate(chain, s, lo, mid, out);
  isolate(chain, s, mid, hi, out);
}

}  // namespace detail

// Exact comparison of two reliability polynomials (same m) on (0,1). Returns
// dominance when the difference has constant sign (isolated zeros allowed),
// Equal when identically zero, otherwise Crossing with disjoint rational
// intervals each isolating one sign change.
inline ComparisonVerdict compare_on_unit_interval(const RelPoly& a, const RelPoly& b) {
  if (a.m != b.m)
    throw relpoly_error("compare_on_unit_interval: edge counts differ (" + std::to_string(a.m) +
                        " vs " + std::to_string(b.m) + ")");
  RelPoly diff = RelPoly::zero(a.m);
  bool all_zero = true;
  for (std::size_t i = 0; i <= a.m; ++i) {
    diff.N[i] = a.N[i] - b.N[i];
    if (diff.N[i] != 0) all_zero = false;
  }
  if (all_zero) return {CompareOutcome::Equal, {}};

  PowerPoly power = to_power(diff);
  detail::IPoly r(power.c.begin(), power.c.end());
  // Strip known endpoint roots: factors of p ...
  std::size_t lead_zero = 0;
  while (r[lead_zero] == 0) ++lead_zero;
  r.erase(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(lead_zero));
  // ... and factors of (1-p): synthetic division while r(1) == 0.
  auto value_at_one = [](const detail::IPoly& p) {
    Integer s = 0;
    for (const auto& c : p) s += c;
    return s;
  };
  while (value_at_one(r) == 0) {
    detail::IPoly q(r.size() - 1);
    Integer carry = 0;
    for (std::size_t k = 0; k + 1 < r.size(); ++k) {
      carry += r[k];
      q[k] = carry;
    }
    r = std::move(q);
  }
  detail::make_primitive(r);

  if (r.size() <= 1) {
    // Constant after stripping: pure sign.
    return {detail::sign_of(r[0]) > 0 ? CompareOutcome::FirstDominates
                                      : CompareOutcome::SecondDominates,
            {}};
  }

  detail::IPoly s = detail::squarefree_part(r);
  auto chain = detail::sturm_chain(s);
  std::vector<std::pair<Rational, Rational>> candidates;
  detail::isolate(chain, s, Rational(0), Rational(1), candidates);

  ComparisonVerdict verdict;
  for (auto& [lo, hi] : candidates) {
    // Pull the endpoints strictly inside (0,1); the root is a fixed point of
    // (0,1) so finitely many refinements suffice.
    while (lo == 0 || hi == 1) {
      Rational mid = detail::split_point(s, lo, hi);
      if (detail::variations(chain, lo) - detail::variations(chain, mid) == 1)
        hi = mid;
      else
        lo = mid;
    }
    if (detail::sign_at(r, lo) * detail::sign_at(r, hi) < 0)
      verdict.intervals.push_back({lo, hi});
  }
  if (!verdict.intervals.empty()) {
    verdict.outcome = CompareOutcome::Crossing;
    return verdict;
  }
  // No sign change anywhere: the sign right of 0 persists on all of (0,1).
  verdict.outcome = detail::sign_of(r[0]) > 0 ? CompareOutcome::FirstDominates
                                              : CompareOutcome::SecondDominates;
  return verdict;
}

}  // namespace hamrel
