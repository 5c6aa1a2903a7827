#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

struct Graph6Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Upper-triangle bits in column order: (0,1), (0,2), (1,2), (0,3), ...
inline std::vector<bool> triangle_bits_from_masks(const AdjMasks& adj, int n) {
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      bits.push_back((adj[i] >> j) & 1);
  return bits;
}

inline std::string pack_graph6(int n, const std::vector<bool>& bits) {
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int group = 0;
    for (std::size_t b = 0; b < 6; ++b) {
      group <<= 1;
      if (i + b < bits.size() && bits[i + b]) group |= 1;
    }
    out.push_back(static_cast<char>(group + 63));
  }
  return out;
}

}  // namespace detail

// Standard graph6 encoding of the red subgraph (single-byte header, n <= 62).
inline std::string graph6_encode(const RedBlueGraph& g) {
  if (g.order() > 62)
    throw Graph6Error("graph6: single-byte header supports at most 62 vertices");
  AdjMasks red = g.subgraph(Colour::Red);
  return detail::pack_graph6(g.order(), detail::triangle_bits_from_masks(red, g.order()));
}

// Decodes a graph6 line. 'stored' names the colour the file records; the
// other colour is the complement.
inline RedBlueGraph graph6_decode(const std::string& bytes, Colour stored = Colour::Red) {
  if (bytes.empty()) throw Graph6Error("graph6: empty input");
  int n = static_cast<unsigned char>(bytes[0]) - 63;
  if (n < 0 || n > 62) throw Graph6Error("graph6: bad size byte");
  if (n < 3) throw Graph6Error("graph6: fewer than 3 vertices");
  std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t nbytes = (nbits + 5) / 6;
  if (bytes.size() != 1 + nbytes) throw Graph6Error("graph6: malformed length");

  AdjMasks adj{};
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = static_cast<unsigned char>(bytes[1 + k / 6]) - 63;
      if (byte < 0 || byte > 63) throw Graph6Error("graph6: byte out of range");
      if ((byte >> (5 - k % 6)) & 1) {
        adj[i] |= detail::vbit(j);
        adj[j] |= detail::vbit(i);
      }
    }
  // Padding bits past the triangle must be zero.
  for (std::size_t pad = nbits; pad < nbytes * 6; ++pad) {
    int byte = static_cast<unsigned char>(bytes[1 + pad / 6]) - 63;
    if (byte < 0 || byte > 63) throw Graph6Error("graph6: byte out of range");
    if ((byte >> (5 - pad % 6)) & 1) throw Graph6Error("graph6: nonzero padding bits");
  }

  if (stored == Colour::Red) return RedBlueGraph::from_masks(n, adj);
  AdjMasks red{};
  VertexMask full = detail::all_below(n);
  for (int v = 0; v < n; ++v) red[v] = ~adj[v] & full & ~detail::vbit(v);
  return RedBlueGraph::from_masks(n, red);
}

}  // namespace ramsey
