#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "hamrel/multigraph.hpp"

namespace hamrel {

// A spanning cycle, stored as the vertex order (implicitly closed).
struct HamCycle {
  std::vector<int> order;
};

// Backtracking search with degree-sorted branching. Prunes on connectivity of
// the unvisited region and on unvisited vertices running out of usable
// neighbors. Parallel edges never affect hamiltonicity, so the search runs on
// the simple support. Deterministic for fixed input.
inline std::optional<HamCycle> find_hamiltonian_cycle(const Multigraph& input) {
  const Multigraph g = input.is_simple() ? input : input.simple_support();
  const int n = g.vertex_count();
  if (n < 3 || !g.is_connected()) return std::nullopt;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 2) return std::nullopt;

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : adj)
    std::sort(nb.begin(), nb.end(), [&](int a, int b) {
      return std::make_pair(adj[static_cast<std::size_t>(a)].size(), a) <
             std::make_pair(adj[static_cast<std::size_t>(b)].size(), b);
    });
  std::vector<std::vector<bool>> has(static_cast<std::size_t>(n),
                                     std::vector<bool>(static_cast<std::size_t>(n), false));
  for (const auto& [u, v] : g.edges()) {
    has[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    has[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
  }

  std::vector<int> path = {0};
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  used[0] = true;

  // The unvisited vertices plus the path's two ends must stay connected, and
  // every unvisited vertex needs two usable neighbors (degree-2 vertices
  // force both incident edges, which this check propagates).
  auto prune = [&](int cur) {
    std::vector<int> reach;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    reach.push_back(cur);
    seen[static_cast<std::size_t>(cur)] = true;
    for (std::size_t qi = 0; qi < reach.size(); ++qi) {
      for (int w : adj[static_cast<std::size_t>(reach[qi])]) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        if (used[static_cast<std::size_t>(w)] && w != 0) continue;
        seen[static_cast<std::size_t>(w)] = true;
        reach.push_back(w);
      }
    }
    for (int v = 0; v < n; ++v)
      if (!used[static_cast<std::size_t>(v)] && !seen[static_cast<std::size_t>(v)]) return true;
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      int avail = 0;
      for (int w : adj[static_cast<std::size_t>(v)])
        if (!used[static_cast<std::size_t>(w)] || w == 0 || w == cur) ++avail;
      if (avail < 2) return true;
    }
    return false;
  };

  auto dfs = [&](auto&& self, int cur) -> bool {
    if (static_cast<int>(path.size()) == n)
      return has[static_cast<std::size_t>(cur)][0];
    if (prune(cur)) return false;
    for (int w : adj[static_cast<std::size_t>(cur)]) {
      if (used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = true;
      path.push_back(w);
      if (self(self, w)) return true;
      path.pop_back();
      used[static_cast<std::size_t>(w)] = false;
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return HamCycle{path};
}

// Ore's sufficient condition: d(u) + d(v) >= n for every non-adjacent pair.
inline bool ore_condition(const Multigraph& input) {
  const Multigraph g = input.is_simple() ? input : input.simple_support();
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.multiplicity(u, v) == 0 &&
          deg[static_cast<std::size_t>(u)] + deg[static_cast<std::size_t>(v)] < n)
        return false;
  return true;
}

// A vertex of degree >= 3 whose neighbors include three of degree 2 cannot
// lie on a spanning cycle: true here certifies non-hamiltonicity.
inline bool degree_obstruction(const Multigraph& input) {
  const Multigraph g = input.is_simple() ? input : input.simple_support();
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  auto adj = g.adjacency();
  for (int v = 0; v < n; ++v) {
    if (deg[static_cast<std::size_t>(v)] < 3) continue;
    int low = 0;
    for (const auto& [w, ei] : adj[static_cast<std::size_t>(v)])
      if (deg[static_cast<std::size_t>(w)] == 2) ++low;
    if (low >= 3) return true;
  }
  return false;
}

enum class ChordKind { A, AHat, B };

// Cyclic gap lengths between the chord endpoints of a two-chord hamiltonian
// graph, plus the chord configuration: A = chords interleave (cross), AHat =
// chords share an endpoint (one gap collapses to zero), B = neither (each
// chord closes off a single gap).
struct ChordClass {
  ChordKind kind = ChordKind::A;
  std::array<int, 4> vec{};
};

namespace detail {

inline std::array<int, 4> min_rotation(std::array<int, 4> v, int step = 1) {
  std::array<int, 4> best = v;
  for (int r = step; r < 4; r += step) {
    std::array<int, 4> cand{};
    for (int i = 0; i < 4; ++i) cand[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>((i + r) % 4)];
    best = std::min(best, cand);
  }
  return best;
}

}  // namespace detail

inline ChordClass classify_two_chord(const Multigraph& g, const HamCycle& cycle) {
  if (!g.is_simple()) throw graph_error("classify_two_chord: graph must be simple");
  const int n = g.vertex_count();
  if (g.edge_count() != static_cast<std::size_t>(n) + 2)
    throw graph_error("classify_two_chord: needs m = n+2");
  if (static_cast<int>(cycle.order.size()) != n)
    throw graph_error("classify_two_chord: cycle has wrong length");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int v = cycle.order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1)
      throw graph_error("classify_two_chord: cycle is not a vertex permutation");
    pos[static_cast<std::size_t>(v)] = i;
  }
  std::set<VertexPair> cycle_edges;
  for (int i = 0; i < n; ++i) {
    int u = cycle.order[static_cast<std::size_t>(i)];
    int v = cycle.order[static_cast<std::size_t>((i + 1) % n)];
    if (g.multiplicity(u, v) == 0)
      throw graph_error("classify_two_chord: sequence is not a cycle of the graph");
    cycle_edges.insert({std::min(u, v), std::max(u, v)});
  }
  std::vector<VertexPair> chords;
  for (const auto& e : g.edges())
    if (!cycle_edges.count(e)) chords.push_back(e);
  if (chords.size() != 2) throw graph_error("classify_two_chord: expected exactly two chords");

  auto p1a = pos[static_cast<std::size_t>(chords[0].first)];
  auto p1b = pos[static_cast<std::size_t>(chords[0].second)];
  auto p2a = pos[static_cast<std::size_t>(chords[1].first)];
  auto p2b = pos[static_cast<std::size_t>(chords[1].second)];

  const bool shared = chords[0].first == chords[1].first || chords[0].first == chords[1].second ||
                      chords[0].second == chords[1].first || chords[0].second == chords[1].second;
  ChordClass out;
  if (shared) {
    out.kind = ChordKind::AHat;
    int s = 0;
    if (chords[0].first == chords[1].first || chords[0].first == chords[1].second)
      s = chords[0].first;
    else
      s = chords[0].second;
    int a = chords[0].first == s ? chords[0].second : chords[0].first;
    int b = chords[1].first == s ? chords[1].second : chords[1].first;
    int ps = pos[static_cast<std::size_t>(s)], pa = pos[static_cast<std::size_t>(a)],
        pb = pos[static_cast<std::size_t>(b)];
    // Read gaps around the circle with the shared endpoint doubled.
    std::array<int, 3> sorted{ps, pa, pb};
    std::sort(sorted.begin(), sorted.end());
    int i_s = static_cast<int>(std::find(sorted.begin(), sorted.end(), ps) - sorted.begin());
    int prev = sorted[static_cast<std::size_t>((i_s + 2) % 3)];
    int next = sorted[static_cast<std::size_t>((i_s + 1) % 3)];
    auto gap = [&](int from, int to) { return ((to - from) % n + n) % n; };
    out.vec = {gap(prev, ps), 0, gap(ps, next), gap(next, prev)};
    out.vec = detail::min_rotation(out.vec);
    return out;
  }

  std::array<int, 4> ps{p1a, p1b, p2a, p2b};
  std::sort(ps.begin(), ps.end());
  std::array<int, 4> gaps{ps[1] - ps[0], ps[2] - ps[1], ps[3] - ps[2], n - ps[3] + ps[0]};
  // Interleave test: exactly one endpoint of chord 2 lies strictly between
  // the endpoints of chord 1 (in cyclic position order).
  int lo = std::min(p1a, p1b), hi = std::max(p1a, p1b);
  bool in2a = p2a > lo && p2a < hi, in2b = p2b > lo && p2b < hi;
  if (in2a != in2b) {
    out.kind = ChordKind::A;
    out.vec = detail::min_rotation(gaps);
  } else {
    out.kind = ChordKind::B;
    // Convention: chords close off the even-position gaps (x2 and x4); the
    // chordless gaps are x1 and x3. Rotate so that holds, then minimize over
    // the two parity-preserving rotations.
    // The gap ps[i] -> ps[i+1] is chord-spanned iff (ps[i], ps[i+1]) is a chord.
    auto is_chord_gap = [&](int i) {
      int u = cycle.order[static_cast<std::size_t>(ps[static_cast<std::size_t>(i)])];
      int v = cycle.order[static_cast<std::size_t>(ps[static_cast<std::size_t>((i + 1) % 4)])];
      VertexPair key{std::min(u, v), std::max(u, v)};
      return key == chords[0] || key == chords[1];
    };
    std::array<int, 4> rotated{};
    if (is_chord_gap(0)) {
      // spanned gaps at positions 1 and 3 (0-indexed 0 and 2): shift by 3.
      for (int i = 0; i < 4; ++i) rotated[static_cast<std::size_t>(i)] = gaps[static_cast<std::size_t>((i + 3) % 4)];
    } else {
      rotated = gaps;
    }
    out.vec = detail::min_rotation(rotated, 2);
  }
  return out;
}

}  // namespace hamrel
