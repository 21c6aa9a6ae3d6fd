#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hamrel/multigraph.hpp"

namespace hamrel {

// Canonical labeling by iterative color refinement with backtracking over the
// first smallest non-singleton cell, taking the lexicographically minimal
// adjacency encoding over all explored leaves. Automorphisms discovered as
// equal-encoding leaves prune sibling branches (orbit pruning restricted to
// automorphisms fixing the current individualization prefix, which keeps the
// pruning sound). Handles parallel-edge multiplicities, so the same engine
// serves both simple-graph deduplication and multigraph memo keys.
using CanonicalCode = std::string;

namespace detail {

class Canonicalizer {
 public:
  explicit Canonicalizer(const Multigraph& g)
      : n_(g.vertex_count()), mult_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0) {
    for (const auto& [u, v] : g.edges()) {
      ++mult_[idx(u, v)];
      ++mult_[idx(v, u)];
    }
    for (int v = 0; v < n_; ++v) {
      auto& nb = neighbors_.emplace_back();
      for (int u = 0; u < n_; ++u)
        if (u != v && mult_[idx(v, u)] > 0) nb.push_back(u);
    }
  }

  CanonicalCode run() {
    std::vector<int> colors(static_cast<std::size_t>(n_), 0);
    std::vector<int> path;
    search(colors, path);
    return best_;
  }

 private:
  std::size_t idx(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  // Equitable refinement: split cells by the multiset of (neighbor color,
  // multiplicity) pairs until stable. New color ids follow signature order,
  // which keeps the partition label-independent.
  void refine(std::vector<int>& colors) const {
    using Sig = std::vector<std::int64_t>;
    std::vector<std::pair<Sig, int>> sigs(static_cast<std::size_t>(n_));
    int ncolors = 1 + *std::max_element(colors.begin(), colors.end());
    while (true) {
      for (int v = 0; v < n_; ++v) {
        Sig s;
        s.reserve(neighbors_[static_cast<std::size_t>(v)].size() + 1);
        s.push_back(colors[static_cast<std::size_t>(v)]);
        for (int u : neighbors_[static_cast<std::size_t>(v)])
          s.push_back(static_cast<std::int64_t>(colors[static_cast<std::size_t>(u)]) * 65536 +
                      mult_[idx(v, u)]);
        std::sort(s.begin() + 1, s.end());
        sigs[static_cast<std::size_t>(v)] = {std::move(s), v};
      }
      std::vector<std::pair<Sig, int>> sorted = sigs;
      std::sort(sorted.begin(), sorted.end());
      int next = -1;
      const Sig* prev = nullptr;
      for (const auto& [s, v] : sorted) {
        if (prev == nullptr || s != *prev) {
          ++next;
          prev = &s;
        }
        colors[static_cast<std::size_t>(v)] = next;
      }
      if (next + 1 == ncolors) return;
      ncolors = next + 1;
    }
  }

  void leaf(const std::vector<int>& colors) {
    std::vector<int> orig(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) orig[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])] = v;
    CanonicalCode enc;
    enc.reserve(1 + static_cast<std::size_t>(n_) * (static_cast<std::size_t>(n_) - 1) / 2);
    enc.push_back(static_cast<char>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        unsigned m = mult_[idx(orig[static_cast<std::size_t>(i)], orig[static_cast<std::size_t>(j)])];
        enc.push_back(static_cast<char>(m > 255 ? 255 : m));
      }
    if (!have_best_ || enc < best_) {
      best_ = std::move(enc);
      best_perm_ = colors;
      have_best_ = true;
    } else if (enc == best_) {
      // colors and best_perm_ reach the same encoding: their composition is
      // an automorphism, usable for orbit pruning.
      std::vector<int> inv(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) inv[static_cast<std::size_t>(best_perm_[static_cast<std::size_t>(v)])] = v;
      std::vector<int> sigma(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) sigma[static_cast<std::size_t>(v)] = inv[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
      if (autos_.size() < 64) autos_.push_back(std::move(sigma));
    }
  }

  void search(std::vector<int> colors, std::vector<int>& path) {
    refine(colors);
    int ncolors = 1 + *std::max_element(colors.begin(), colors.end());
    if (ncolors == n_) {
      leaf(colors);
      return;
    }
    std::vector<int> size(static_cast<std::size_t>(ncolors), 0);
    for (int v = 0; v < n_; ++v) ++size[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
    int target = -1;
    for (int c = 0; c < ncolors; ++c)
      if (size[static_cast<std::size_t>(c)] > 1 &&
          (target == -1 || size[static_cast<std::size_t>(c)] < size[static_cast<std::size_t>(target)]))
        target = c;

    // Orbits under automorphisms that fix the individualized prefix.
    std::vector<int> uf(static_cast<std::size_t>(n_));
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
      while (uf[static_cast<std::size_t>(x)] != x) {
        uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
        x = uf[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const auto& sigma : autos_) {
      bool fixes = true;
      for (int x : path)
        if (sigma[static_cast<std::size_t>(x)] != x) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(sigma[static_cast<std::size_t>(v)]);
        if (a != b) uf[static_cast<std::size_t>(a)] = b;
      }
    }

    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (colors[static_cast<std::size_t>(v)] != target) continue;
      int rep = find(v);
      bool seen = false;
      for (int t : tried)
        if (find(t) == rep) {
          seen = true;
          break;
        }
      if (seen) continue;
      tried.push_back(v);
      std::vector<int> c2(static_cast<std::size_t>(n_));
      for (int u = 0; u < n_; ++u)
        c2[static_cast<std::size_t>(u)] = colors[static_cast<std::size_t>(u)] * 2 + (u == v ? 0 : 1);
      path.push_back(v);
      search(std::move(c2), path);
      path.pop_back();
    }
  }

  int n_;
  std::vector<std::uint16_t> mult_;
  std::vector<std::vector<int>> neighbors_;
  CanonicalCode best_;
  std::vector<int> best_perm_;
  bool have_best_ = false;
  std::vector<std::vector<int>> autos_;
};

}  // namespace detail

// Canonical code of a multigraph: equal codes iff isomorphic (respecting
// parallel-edge multiplicities).
inline CanonicalCode canonical_code_multigraph(const Multigraph& g) {
  return detail::Canonicalizer(g).run();
}

// Spec'd entry point for enumeration: simple graphs only.
inline CanonicalCode canonical_form(const Multigraph& g) {
  if (!g.is_simple()) throw graph_error("canonical_form: parallel edges not supported here");
  return canonical_code_multigraph(g);
}

}  // namespace hamrel
