#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hamrel/multigraph.hpp"

namespace hamrel {

// graph6 interchange format: upper triangle of the adjacency matrix scanned
// column-major, packed into 6-bit groups offset by 63. Short form only
// (n <= 62); simple graphs only, since the format has no multiplicities.

inline std::string encode_graph6(const Multigraph& g) {
  if (!g.is_simple()) throw graph_error("graph6: parallel edges cannot be encoded");
  const int n = g.vertex_count();
  if (n > 62) throw graph_error("graph6: short form requires n <= 62, got " + std::to_string(n));
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) / 2);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) bits.push_back(g.multiplicity(u, v) > 0);
  while (bits.size() % 6 != 0) bits.push_back(false);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int chunk = 0;
    for (std::size_t j = 0; j < 6; ++j) chunk = (chunk << 1) | (bits[i + j] ? 1 : 0);
    out.push_back(static_cast<char>(63 + chunk));
  }
  return out;
}

inline Multigraph decode_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw graph_error("graph6: empty input");
  auto value = [&](std::size_t i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw graph_error("graph6: invalid byte at offset " + std::to_string(i));
    return static_cast<int>(c) - 63;
  };
  int n = value(0);
  if (n == 63) throw graph_error("graph6: long form (n >= 63) not supported, offset 0");
  const std::size_t nbits = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() != 1 + nbytes)
    throw graph_error("graph6: expected " + std::to_string(1 + nbytes) + " bytes for n=" +
                      std::to_string(n) + ", got " + std::to_string(text.size()) +
                      " (offset " + std::to_string(std::min(text.size(), 1 + nbytes)) + ")");
  std::vector<VertexPair> edges;
  std::size_t bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int chunk = value(1 + bit / 6);
      if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  // Trailing pad bits must be zero.
  for (std::size_t b = nbits; b < nbytes * 6; ++b)
    if ((value(1 + b / 6) >> (5 - b % 6)) & 1)
      throw graph_error("graph6: nonzero padding at offset " + std::to_string(1 + b / 6));
  return Multigraph::make(n == 0 ? 1 : n, edges);
}

// Plain text multigraph format, one graph per call: "n m\nu v\n...".
// graph6 cannot carry parallel edges; this can.
inline std::string to_edge_list(const Multigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline Multigraph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0;
  std::size_t m = 0;
  if (!(in >> n >> m)) throw graph_error("edge list: missing 'n m' header");
  std::vector<VertexPair> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v))
      throw graph_error("edge list: expected " + std::to_string(m) + " edges, got " +
                        std::to_string(i));
    edges.emplace_back(u, v);
  }
  return Multigraph::make(n, edges);
}

}  // namespace hamrel
