#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hamrel/canonical.hpp"
#include "hamrel/multigraph.hpp"
#include "hamrel/relpoly.hpp"

namespace hamrel {

// Exact reliability via the factoring recursion
//   Rel(G) = (1-p) Rel(G-e) + p Rel(G/e)
// with bridge/loop handling and closed forms that stop the recursion before
// the graph is dismantled to trivial pieces. Reliability multiplies over
// blocks (maximal 2-connected pieces share at most a cut vertex), which
// yields the bundle-tree and glued-cycle products directly; cycle-skeleton
// blocks get the one-bundle-may-fail closed form.
struct FactoringOptions {
  enum class Pivot { ShortestCycle, FirstEdge };
  Pivot pivot = Pivot::ShortestCycle;
  // Memo keyed by the canonical multigraph code. Off for small subproblems
  // (m <= 12) where recursion is cheaper than canonization, and off for wide
  // subgraphs where canonization dominates the wins.
  std::size_t memo_limit = 1u << 20;
  std::size_t memo_min_edges = 13;
  int memo_max_vertices = 16;
};

namespace detail {

struct FactoringContext {
  FactoringOptions opts;
  std::unordered_map<std::string, PowerPoly> memo;
  std::mutex memo_mutex;
};

// Edge lists of the biconnected components (bridges come out as single-edge
// blocks, parallel bundles as one block).
inline std::vector<std::vector<std::size_t>> biconnected_blocks(const Multigraph& g) {
  const int n = g.vertex_count();
  auto adj = g.adjacency();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<std::size_t> edge_stack;
  std::vector<std::vector<std::size_t>> blocks;
  int timer = 0;

  struct Frame {
    int v;
    std::size_t next = 0;
    std::size_t via_edge;
  };
  std::vector<Frame> stack;
  for (int s = 0; s < n; ++s) {
    if (disc[static_cast<std::size_t>(s)] != -1) continue;
    stack.push_back({s, 0, static_cast<std::size_t>(-1)});
    disc[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto& nb = adj[static_cast<std::size_t>(f.v)];
      if (f.next < nb.size()) {
        auto [w, ei] = nb[f.next++];
        if (ei == f.via_edge) continue;
        if (disc[static_cast<std::size_t>(w)] == -1) {
          edge_stack.push_back(ei);
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
          stack.push_back({w, 0, ei});
        } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
          edge_stack.push_back(ei);
          low[static_cast<std::size_t>(f.v)] =
              std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
        }
      } else {
        stack.pop_back();
        if (stack.empty()) break;
        Frame& parent = stack.back();
        low[static_cast<std::size_t>(parent.v)] =
            std::min(low[static_cast<std::size_t>(parent.v)], low[static_cast<std::size_t>(f.v)]);
        if (low[static_cast<std::size_t>(f.v)] >= disc[static_cast<std::size_t>(parent.v)]) {
          std::vector<std::size_t> block;
          // Pop until the tree edge into f.v is consumed.
          while (!edge_stack.empty()) {
            std::size_t ei = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(ei);
            if (ei == f.via_edge) break;
          }
          blocks.push_back(std::move(block));
        }
      }
    }
  }
  return blocks;
}

// Extract the block as a standalone graph, vertices relabeled 0..k-1 in
// ascending original order.
inline Multigraph block_subgraph(const Multigraph& g, const std::vector<std::size_t>& edge_ids) {
  std::vector<int> verts;
  for (std::size_t ei : edge_ids) {
    verts.push_back(g.edges()[ei].first);
    verts.push_back(g.edges()[ei].second);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) local[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
  std::vector<VertexPair> edges;
  edges.reserve(edge_ids.size());
  for (std::size_t ei : edge_ids) {
    const auto& [u, v] = g.edges()[ei];
    edges.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
  }
  return Multigraph::make(static_cast<int>(verts.size()), edges);
}

// Bundle sizes if the simple support is a single cycle (length >= 3).
inline std::optional<std::vector<std::size_t>> as_multicycle(const Multigraph& g) {
  Multigraph support = g.simple_support();
  const int n = support.vertex_count();
  if (n < 3 || support.edge_count() != static_cast<std::size_t>(n)) return std::nullopt;
  for (int v = 0; v < n; ++v)
    if (support.degree(v) != 2) return std::nullopt;
  if (!support.is_connected()) return std::nullopt;
  std::vector<std::size_t> bundles;
  bundles.reserve(static_cast<std::size_t>(n));
  for (const auto& [u, v] : support.edges()) bundles.push_back(g.multiplicity(u, v));
  return bundles;
}

// Rel of a bundle of k parallel edges: 1 - (1-p)^k.
inline PowerPoly bundle_poly(std::size_t k) {
  return PowerPoly::one() - PowerPoly::one_minus_p_pow(k);
}

// Cycle skeleton with bundle sizes k_1..k_r stays connected iff at most one
// bundle fails entirely: prod(1-Q_i) + sum_i Q_i prod_{j!=i} (1-Q_j), with
// Q_i = (1-p)^{k_i}.
inline PowerPoly multicycle_poly(const std::vector<std::size_t>& bundles) {
  PowerPoly all_up = PowerPoly::one();
  for (std::size_t k : bundles) all_up = all_up * bundle_poly(k);
  PowerPoly acc = all_up;
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    PowerPoly term = PowerPoly::one_minus_p_pow(bundles[i]);
    for (std::size_t j = 0; j < bundles.size(); ++j)
      if (j != i) term = term * bundle_poly(bundles[j]);
    acc = acc + term;
  }
  return acc;
}

// Deterministic pivot: an edge on a shortest cycle (parallel bundles are
// 2-cycles), falling back to the first edge.
inline std::size_t pick_pivot(const Multigraph& g, FactoringOptions::Pivot policy) {
  if (policy == FactoringOptions::Pivot::FirstEdge) return 0;
  const auto& edges = g.edges();
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    if (edges[i] == edges[i + 1]) return i;
  // BFS girth over the simple graph; ties resolved by scan order.
  const int n = g.vertex_count();
  auto adj = g.adjacency();
  std::size_t best_edge = 0;
  int best_len = -1;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<std::size_t> via(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    via[static_cast<std::size_t>(s)] = static_cast<std::size_t>(-1);
    std::vector<int> queue = {s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (const auto& [w, ei] : adj[static_cast<std::size_t>(v)]) {
        if (ei == via[static_cast<std::size_t>(v)]) continue;
        if (dist[static_cast<std::size_t>(w)] == -1) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          via[static_cast<std::size_t>(w)] = ei;
          queue.push_back(w);
        } else {
          int len = dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1;
          if (best_len == -1 || len < best_len) {
            best_len = len;
            best_edge = ei;
          }
        }
      }
    }
    if (best_len == 3) break;
  }
  return best_edge;
}

inline PowerPoly rel_power(const Multigraph& g, FactoringContext& ctx);

inline PowerPoly block_power(const Multigraph& b, FactoringContext& ctx) {
  if (b.vertex_count() == 2) return bundle_poly(b.edge_count());
  if (auto bundles = as_multicycle(b)) return multicycle_poly(*bundles);

  const bool use_memo = b.edge_count() >= ctx.opts.memo_min_edges &&
                        b.vertex_count() <= ctx.opts.memo_max_vertices;
  std::string key;
  if (use_memo) {
    key = canonical_code_multigraph(b);
    std::lock_guard<std::mutex> lock(ctx.memo_mutex);
    auto it = ctx.memo.find(key);
    if (it != ctx.memo.end()) return it->second;
  }

  std::size_t pivot = pick_pivot(b, ctx.opts.pivot);
  PowerPoly del = rel_power(b.delete_edge({pivot}), ctx);
  PowerPoly con = rel_power(b.contract_edge({pivot}), ctx);
  PowerPoly result = PowerPoly::one_minus_p_pow(1) * del + con.shifted(1);

  if (use_memo) {
    std::lock_guard<std::mutex> lock(ctx.memo_mutex);
    if (ctx.memo.size() < ctx.opts.memo_limit) ctx.memo.emplace(std::move(key), result);
  }
  return result;
}

inline PowerPoly rel_power(const Multigraph& g, FactoringContext& ctx) {
  if (!g.is_connected()) return PowerPoly::zero();
  if (g.vertex_count() == 1) return PowerPoly::one();
  PowerPoly acc = PowerPoly::one();
  for (const auto& block : biconnected_blocks(g))
    acc = acc * block_power(block_subgraph(g, block), ctx);
  return acc;
}

}  // namespace detail

// Exact pathset-count vector of g. Pivot-choice independent; disconnected
// input yields the zero vector.
inline RelPoly rel_factoring(const Multigraph& g, const FactoringOptions& opts = {}) {
  detail::FactoringContext ctx{opts, {}, {}};
  PowerPoly power = detail::rel_power(g, ctx);
  return from_power(power, g.edge_count());
}

}  // namespace hamrel
