#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hamrel {

class graph_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Index into the deterministic edge ordering of a Multigraph: lexicographic
// by (min endpoint, max endpoint), parallel copies adjacent.
struct EdgeRef {
  std::size_t index = 0;
};

using VertexPair = std::pair<int, int>;

// Immutable multigraph value: n labeled vertices 0..n-1 and a multiset of
// unordered edges. Parallel edges are permitted, loops are never stored
// (contraction discards them on creation). All operations return new values.
class Multigraph {
 public:
  Multigraph() = default;

  static Multigraph make(int n, const std::vector<VertexPair>& edges) {
    if (n < 1) throw graph_error("multigraph: vertex count must be >= 1, got " + std::to_string(n));
    Multigraph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    for (const auto& [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw graph_error("multigraph: endpoint out of range in edge (" + std::to_string(u) +
                          "," + std::to_string(v) + ") for n=" + std::to_string(n));
      if (u == v)
        throw graph_error("multigraph: loop (" + std::to_string(u) + "," + std::to_string(v) +
                          ") not allowed in input");
      g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::stable_sort(g.edges_.begin(), g.edges_.end());
    return g;
  }

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<VertexPair>& edges() const { return edges_; }

  VertexPair edge(EdgeRef e) const {
    check_ref(e);
    return edges_[e.index];
  }

  int degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges_) d += (a == v) + (b == v);
    return d;
  }

  std::size_t multiplicity(int u, int v) const {
    if (u > v) std::swap(u, v);
    std::size_t k = 0;
    for (const auto& e : edges_) k += (e.first == u && e.second == v);
    return k;
  }

  bool is_simple() const {
    return std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end();
  }

  // Underlying simple graph: parallel copies collapsed to one edge.
  Multigraph simple_support() const {
    Multigraph g;
    g.n_ = n_;
    g.edges_ = edges_;
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    return g;
  }

  Multigraph delete_edge(EdgeRef e) const {
    check_ref(e);
    Multigraph g;
    g.n_ = n_;
    g.edges_ = edges_;
    g.edges_.erase(g.edges_.begin() + static_cast<std::ptrdiff_t>(e.index));
    return g;
  }

  // Merge the endpoints of e into the smaller label; labels above the removed
  // vertex shift down by one; loops created by parallel copies are dropped.
  Multigraph contract_edge(EdgeRef e) const {
    check_ref(e);
    const auto [keep, gone] = edges_[e.index];
    Multigraph g;
    g.n_ = n_ - 1;
    g.edges_.reserve(edges_.size() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (i == e.index) continue;
      auto remap = [&](int x) {
        if (x == gone) x = keep;
        return x > gone ? x - 1 : x;
      };
      int a = remap(edges_[i].first);
      int b = remap(edges_[i].second);
      if (a == b) continue;
      g.edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::stable_sort(g.edges_.begin(), g.edges_.end());
    return g;
  }

  // Apply a vertex permutation: perm[old] = new.
  Multigraph relabel(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
      throw graph_error("relabel: permutation size mismatch");
    Multigraph g;
    g.n_ = n_;
    g.edges_.reserve(edges_.size());
    for (const auto& [u, v] : edges_) {
      int a = perm[static_cast<std::size_t>(u)];
      int b = perm[static_cast<std::size_t>(v)];
      g.edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::stable_sort(g.edges_.begin(), g.edges_.end());
    return g;
  }

  // (neighbor, edge index) lists; parallel edges appear once per copy.
  std::vector<std::vector<std::pair<int, std::size_t>>> adjacency() const {
    std::vector<std::vector<std::pair<int, std::size_t>>> adj(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto& [u, v] = edges_[i];
      adj[static_cast<std::size_t>(u)].emplace_back(v, i);
      adj[static_cast<std::size_t>(v)].emplace_back(u, i);
    }
    return adj;
  }

  int component_count() const {
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    auto adj = adjacency();
    int count = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
      if (comp[static_cast<std::size_t>(s)] != -1) continue;
      comp[static_cast<std::size_t>(s)] = count;
      stack.push_back(s);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [w, idx] : adj[static_cast<std::size_t>(v)]) {
          if (comp[static_cast<std::size_t>(w)] == -1) {
            comp[static_cast<std::size_t>(w)] = count;
            stack.push_back(w);
          }
        }
      }
      ++count;
    }
    return count;
  }

  bool is_connected() const { return component_count() == 1; }

  // A parallel-duplicated edge is never a bridge: the other copy survives.
  bool is_bridge(EdgeRef e) const {
    check_ref(e);
    const auto& [u, v] = edges_[e.index];
    if (multiplicity(u, v) > 1) return false;
    return delete_edge(e).component_count() > component_count();
  }

  bool operator==(const Multigraph&) const = default;
  auto operator<=>(const Multigraph&) const = default;

 private:
  void check_ref(EdgeRef e) const {
    if (e.index >= edges_.size())
      throw graph_error("edge index " + std::to_string(e.index) + " out of range (m=" +
                        std::to_string(edges_.size()) + ")");
  }

  int n_ = 1;
  std::vector<VertexPair> edges_;
};

inline Multigraph make_graph(int n, const std::vector<VertexPair>& edges) {
  return Multigraph::make(n, edges);
}

inline Multigraph cycle_graph(int n) {
  std::vector<VertexPair> e;
  e.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Multigraph::make(n, e);
}

inline Multigraph complete_graph(int n) {
  std::vector<VertexPair> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Multigraph::make(n, e);
}

inline Multigraph path_graph(int n) {
  std::vector<VertexPair> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Multigraph::make(n, e);
}

// Complement within the simple graph universe.
inline Multigraph complement(const Multigraph& g) {
  if (!g.is_simple()) throw graph_error("complement: requires a simple graph");
  const int n = g.vertex_count();
  std::vector<std::vector<bool>> has(static_cast<std::size_t>(n),
                                     std::vector<bool>(static_cast<std::size_t>(n), false));
  for (const auto& [u, v] : g.edges())
    has[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
  std::vector<VertexPair> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!has[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) e.emplace_back(u, v);
  return Multigraph::make(n, e);
}

}  // namespace hamrel
