#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamrel/bigint.hpp"
#include "hamrel/multigraph.hpp"

namespace hamrel {

class relpoly_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Univariate polynomial in p with exact integer coefficients, ascending
// degree, trailing zeros trimmed.
struct PowerPoly {
  std::vector<Integer> c;

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  std::size_t degree() const { return c.empty() ? 0 : c.size() - 1; }

  static PowerPoly zero() { return {}; }
  static PowerPoly one() { return {{Integer(1)}}; }

  // (1-p)^k
  static PowerPoly one_minus_p_pow(std::size_t k) {
    PowerPoly r;
    r.c.resize(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
      r.c[i] = binom(k, i);
      if (i % 2 == 1) r.c[i] = -r.c[i];
    }
    return r;
  }

  PowerPoly operator+(const PowerPoly& o) const {
    PowerPoly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
  }
  PowerPoly operator-(const PowerPoly& o) const {
    PowerPoly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
    r.trim();
    return r;
  }
  PowerPoly operator*(const PowerPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    PowerPoly r;
    r.c.assign(c.size() + o.c.size() - 1, Integer(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    }
    r.trim();
    return r;
  }
  // multiply by p^k
  PowerPoly shifted(std::size_t k) const {
    if (is_zero()) return zero();
    PowerPoly r;
    r.c.assign(c.size() + k, Integer(0));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
    return r;
  }

  Rational eval(const Rational& p) const {
    Rational acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * p + Rational(c[i]);
    return acc;
  }

  bool operator==(const PowerPoly&) const = default;
};

// Pathset-count vector of a graph with m edges: N[i] counts connected
// spanning subgraphs with exactly i edges.
struct RelPoly {
  std::size_t m = 0;
  std::vector<Integer> N;  // size m+1

  static RelPoly zero(std::size_t m) {
    RelPoly r;
    r.m = m;
    r.N.assign(m + 1, Integer(0));
    return r;
  }

  bool operator==(const RelPoly&) const = default;
};

// Rel(p) = sum_i N_i p^i (1-p)^(m-i), expanded exactly.
inline PowerPoly to_power(const RelPoly& r) {
  PowerPoly acc;
  acc.c.assign(r.m + 1, Integer(0));
  for (std::size_t i = 0; i <= r.m; ++i) {
    if (r.N[i] == 0) continue;
    const std::size_t d = r.m - i;
    for (std::size_t j = 0; j <= d; ++j) {
      Integer term = r.N[i] * binom(d, j);
      if (j % 2 == 1) term = -term;
      acc.c[i + j] += term;
    }
  }
  acc.trim();
  return acc;
}

// Inverse of to_power for a fixed m: N_i = sum_{k<=i} C(m-k, i-k) a_k.
inline RelPoly from_power(const PowerPoly& p, std::size_t m) {
  if (p.c.size() > m + 1) throw relpoly_error("from_power: degree exceeds m");
  RelPoly r = RelPoly::zero(m);
  for (std::size_t i = 0; i <= m; ++i) {
    Integer acc = 0;
    for (std::size_t k = 0; k <= i && k < p.c.size(); ++k)
      acc += binom(m - k, i - k) * p.c[k];
    r.N[i] = acc;
  }
  return r;
}

inline Rational evaluate(const RelPoly& r, const Rational& p) {
  if (p < 0 || p > 1) throw relpoly_error("evaluate: p must lie in [0,1]");
  const Rational q = 1 - p;
  // Horner on the Bernstein-style basis: accumulate powers directly.
  Rational acc = 0;
  Rational pi = 1;
  std::vector<Rational> qpow(r.m + 1);
  qpow[0] = 1;
  for (std::size_t i = 1; i <= r.m; ++i) qpow[i] = qpow[i - 1] * q;
  for (std::size_t i = 0; i <= r.m; ++i) {
    if (r.N[i] != 0) acc += Rational(r.N[i]) * pi * qpow[r.m - i];
    pi *= p;
  }
  return acc;
}

enum class Dominance { Yes, No, Incomparable };

// Coefficient-wise comparison: Yes iff N_i(a) >= N_i(b) for all i, a
// sufficient condition for uniform dominance on [0,1].
inline Dominance dominates(const RelPoly& a, const RelPoly& b) {
  if (a.m != b.m)
    throw relpoly_error("dominates: edge counts differ (" + std::to_string(a.m) + " vs " +
                        std::to_string(b.m) + ")");
  bool a_ge = true, b_ge = true;
  for (std::size_t i = 0; i <= a.m; ++i) {
    if (a.N[i] < b.N[i]) a_ge = false;
    if (b.N[i] < a.N[i]) b_ge = false;
  }
  if (a_ge) return Dominance::Yes;
  if (b_ge) return Dominance::No;
  return Dominance::Incomparable;
}

// Table convention: [N_m, N_{m-1}, ..., N_{n-1}] (leading 1, then m, down to
// the spanning-tree count).
inline std::vector<Integer> coefficient_vector_descending(const RelPoly& r, int n) {
  std::vector<Integer> out;
  const std::size_t lo = static_cast<std::size_t>(n - 1);
  for (std::size_t i = r.m + 1; i-- > lo;) out.push_back(r.N[i]);
  return out;
}

// Spanning-tree count via the matrix-tree theorem: integer determinant of a
// Laplacian cofactor, Bareiss fraction-free elimination. Parallel edges add
// multiplicity. Returns 0 iff disconnected.
inline Integer spanning_tree_count(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 1) return 1;
  const std::size_t d = static_cast<std::size_t>(n - 1);
  std::vector<std::vector<Integer>> a(d, std::vector<Integer>(d, Integer(0)));
  for (const auto& [u, v] : g.edges()) {
    if (u > 0) a[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(u - 1)] += 1;
    if (v > 0) a[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(v - 1)] += 1;
    if (u > 0 && v > 0) {
      a[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)] -= 1;
      a[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(u - 1)] -= 1;
    }
  }
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < d; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < d && a[piv][k] == 0) ++piv;
      if (piv == d) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < d; ++i)
      for (std::size_t j = k + 1; j < d; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  Integer det = a[d - 1][d - 1];
  return sign == 1 ? det : -det;
}

// Definitional oracle: enumerate all 2^m edge subsets and count the connected
// ones per cardinality. Independent of the factoring path.
inline RelPoly rel_bruteforce(const Multigraph& g) {
  const std::size_t m = g.edge_count();
  if (m > 24)
    throw relpoly_error("rel_bruteforce: refusing m=" + std::to_string(m) +
                        " (limit 24: enumeration of 2^m subsets)");
  const int n = g.vertex_count();
  RelPoly r = RelPoly::zero(m);
  std::vector<int> parent(static_cast<std::size_t>(n));
  const auto& edges = g.edges();
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    int comps = n;
    int popcount = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!((mask >> i) & 1)) continue;
      ++popcount;
      int ru = find(edges[i].first), rv = find(edges[i].second);
      if (ru != rv) {
        parent[static_cast<std::size_t>(ru)] = rv;
        --comps;
      }
    }
    if (comps == 1) r.N[static_cast<std::size_t>(popcount)] += 1;
  }
  return r;
}

}  // namespace hamrel
