#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ramsey/cycle_set.hpp"

namespace ramsey {

enum class Colour : std::uint8_t { Red, Blue };

constexpr Colour other(Colour c) { return c == Colour::Red ? Colour::Blue : Colour::Red; }
constexpr const char* colour_name(Colour c) { return c == Colour::Red ? "red" : "blue"; }

using VertexMask = std::uint64_t;
using AdjMasks = std::array<VertexMask, 64>;

namespace detail {

constexpr VertexMask vbit(int v) { return VertexMask{1} << v; }
constexpr VertexMask all_below(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

// Vertices reachable from src through 'region' (src itself excluded from the
// requirement of lying in region). Returns the reach set including src.
inline VertexMask reach_set(const VertexMask* adj, int src, VertexMask region) {
  VertexMask seen = vbit(src);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    VertexMask f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= adj[v];
    }
    next &= region & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

// BFS distance from src to dst through 'region'; -1 if unreachable.
inline int bfs_dist(const VertexMask* adj, int src, int dst, VertexMask region) {
  if (src == dst) return 0;
  VertexMask seen = vbit(src);
  VertexMask frontier = seen;
  int d = 0;
  while (frontier) {
    VertexMask next = 0;
    VertexMask f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= adj[v];
    }
    next &= region & ~seen;
    ++d;
    if (next & vbit(dst)) return d;
    seen |= next;
    frontier = next;
  }
  return -1;
}

// Two-colouring of the induced subgraph on 'verts'; nullopt when an odd
// cycle exists. Deterministic: components are rooted at their least vertex,
// the root always lands in side 0.
inline std::optional<std::array<VertexMask, 2>> bipartition_masks(
    const VertexMask* adj, VertexMask verts) {
  std::array<VertexMask, 2> side{0, 0};
  VertexMask unseen = verts;
  while (unseen) {
    int root = std::countr_zero(unseen);
    VertexMask level = vbit(root);
    int parity = 0;
    VertexMask seen = level;
    side[0] |= level;
    while (level) {
      VertexMask next = 0;
      VertexMask f = level;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj[v];
      }
      next &= verts & ~seen;
      parity ^= 1;
      side[parity] |= next;
      seen |= next;
      level = next;
    }
    unseen &= ~seen;
  }
  // Verify no edge inside a side.
  for (int s = 0; s < 2; ++s) {
    VertexMask m = side[s];
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if (adj[v] & side[s]) return std::nullopt;
    }
  }
  return side;
}

// Biconnected components (vertex masks) of the induced subgraph on 'verts'.
// Only components with at least 3 vertices are returned; every cycle lies
// entirely inside one of them.
inline std::vector<VertexMask> biconnected_components(const VertexMask* adj,
                                                      VertexMask verts) {
  std::array<int, 64> disc{}, low{};
  int timer = 1;
  std::vector<std::pair<int, int>> estack;
  std::vector<VertexMask> comps;

  auto dfs = [&](auto&& self, int u, int parent) -> void {
    disc[u] = low[u] = timer++;
    VertexMask nb = adj[u] & verts;
    while (nb) {
      int w = std::countr_zero(nb);
      nb &= nb - 1;
      if (w == parent) continue;
      if (disc[w] == 0) {
        estack.emplace_back(u, w);
        self(self, w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          VertexMask m = 0;
          while (true) {
            auto [a, b] = estack.back();
            estack.pop_back();
            m |= vbit(a) | vbit(b);
            if (a == u && b == w) break;
          }
          if (std::popcount(m) >= 3) comps.push_back(m);
        }
      } else if (disc[w] < disc[u]) {
        estack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };

  VertexMask todo = verts;
  while (todo) {
    int v = std::countr_zero(todo);
    todo &= todo - 1;
    if (disc[v] == 0) dfs(dfs, v, -1);
  }
  return comps;
}

// Simple path from 'from' to 'to' visiting exactly k vertices (both ends
// counted) inside 'allowed'. Assumes from != to, k >= 2.
inline bool exact_path(const VertexMask* adj, int from, int to, int k,
                       VertexMask allowed) {
  if (!(allowed & vbit(from)) || !(allowed & vbit(to))) return false;
  auto rec = [&](auto&& self, int u, VertexMask used, int cnt) -> bool {
    if (cnt == k - 1) return (adj[u] & vbit(to)) != 0;
    VertexMask cand = adj[u] & allowed & ~used & ~vbit(to);
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      if (k - cnt >= 4) {
        VertexMask region = allowed & ~used & ~vbit(w);
        VertexMask r = reach_set(adj, w, region);
        if (!(r & vbit(to))) continue;
        if (std::popcount(r & region) < k - cnt - 1) continue;
        if (bfs_dist(adj, w, to, region) > k - cnt - 1) continue;
      }
      if (self(self, w, used | vbit(w), cnt + 1)) return true;
    }
    return false;
  };
  return rec(rec, from, vbit(from), 1);
}

// Cycle of exactly k vertices through the edge (u, v); the closing edge
// (v, u) itself is not required to be in adj.
inline bool cycle_through_edge(const VertexMask* adj, int u, int v, int k,
                               VertexMask allowed) {
  return exact_path(adj, u, v, k, allowed);
}

// Exact-length cycle queries against a fixed vertex set, with the
// biconnected/bipartite structure computed once.
class CycleScan {
 public:
  CycleScan(const VertexMask* adj, VertexMask verts) : adj_(adj) {
    for (VertexMask m : biconnected_components(adj, verts)) {
      Comp c;
      c.mask = m;
      c.size = std::popcount(m);
      auto bp = bipartition_masks(adj, m);
      c.bipartite = bp.has_value();
      c.small_side = c.bipartite
                         ? std::min(std::popcount((*bp)[0]), std::popcount((*bp)[1]))
                         : 0;
      comps_.push_back(c);
    }
  }

  bool exists(int k) const {
    if (k < 3) return false;
    for (const Comp& c : comps_) {
      if (c.size < k) continue;
      if (c.bipartite) {
        if (k % 2 == 1) continue;
        if (c.small_side < k / 2) continue;
      }
      if (cycle_in_component(c.mask, k)) return true;
    }
    return false;
  }

  // Least member of 'lens' realised as a cycle length, scanning [3, cap].
  std::optional<int> first_existing(const CycleSet& lens, int cap) const {
    for (int k = 3; k <= cap; ++k)
      if (lens.contains(k) && exists(k)) return k;
    return std::nullopt;
  }

 private:
  struct Comp {
    VertexMask mask;
    int size;
    bool bipartite;
    int small_side;
  };

  bool cycle_in_component(VertexMask comp, int k) const {
    VertexMask anchors = comp;
    while (anchors) {
      int a = std::countr_zero(anchors);
      anchors &= anchors - 1;
      VertexMask allowed = comp & ~(vbit(a) - 1);  // a and everything above
      if (std::popcount(allowed) < k) break;
      if (anchored_cycle(a, k, allowed)) return true;
    }
    return false;
  }

  bool anchored_cycle(int a, int k, VertexMask allowed) const {
    auto rec = [&](auto&& self, int u, VertexMask used, int cnt) -> bool {
      if (cnt == k) return (adj_[u] & vbit(a)) != 0;
      VertexMask cand = adj_[u] & allowed & ~used;
      while (cand) {
        int w = std::countr_zero(cand);
        cand &= cand - 1;
        if (k - cnt >= 3) {
          VertexMask region = (allowed & ~used & ~vbit(w)) | vbit(a);
          VertexMask r = reach_set(adj_, w, region);
          if (!(r & vbit(a))) continue;
          if (std::popcount(r & ~vbit(a)) < k - cnt - 1) continue;
          if (bfs_dist(adj_, w, a, region) > k - cnt) continue;
        }
        if (self(self, w, used | vbit(w), cnt + 1)) return true;
      }
      return false;
    };
    return rec(rec, a, vbit(a), 1);
  }

  const VertexMask* adj_;
  std::vector<Comp> comps_;
};

// Decision version of clique search: a clique of 'need' vertices inside the
// candidate set, vertices taken in ascending order with size pruning.
inline bool clique_decision(const VertexMask* adj, VertexMask cand, int need) {
  if (need <= 0) return true;
  while (true) {
    if (std::popcount(cand) < need) return false;
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (clique_decision(adj, adj[v] & cand, need - 1)) return true;
  }
}

}  // namespace detail

// A complete graph on n vertices (3 <= n <= 64) with every edge coloured red
// or blue; the red edge set determines the colouring. Immutable once built.
class RedBlueGraph {
 public:
  static constexpr int kMaxVertices = 64;

  static RedBlueGraph build(int n, const std::vector<std::pair<int, int>>& red_edges) {
    check_order(n);
    AdjMasks red{};
    for (auto [u, v] : red_edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loop");
      if (red[u] & detail::vbit(v)) throw std::invalid_argument("duplicate edge");
      red[u] |= detail::vbit(v);
      red[v] |= detail::vbit(u);
    }
    return RedBlueGraph(n, red);
  }

  static RedBlueGraph from_masks(int n, const AdjMasks& red) {
    check_order(n);
    AdjMasks r = red;
    VertexMask full = detail::all_below(n);
    for (int v = 0; v < n; ++v) r[v] &= full & ~detail::vbit(v);
    return RedBlueGraph(n, r);
  }

  int order() const { return n_; }
  VertexMask vertices() const { return detail::all_below(n_); }

  bool is_red(int u, int v) const { return (red_[u] >> v) & 1; }
  Colour colour_of(int u, int v) const { return is_red(u, v) ? Colour::Red : Colour::Blue; }

  VertexMask adj(Colour c, int v) const {
    if (c == Colour::Red) return red_[v];
    return ~red_[v] & vertices() & ~detail::vbit(v);
  }

  AdjMasks subgraph(Colour c) const {
    AdjMasks m{};
    for (int v = 0; v < n_; ++v) m[v] = adj(c, v);
    return m;
  }

  std::vector<std::pair<int, int>> edges(Colour c) const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (colour_of(u, v) == c) out.emplace_back(u, v);
    return out;
  }

  int degree(Colour c, int v) const { return std::popcount(adj(c, v)); }

  RedBlueGraph permuted(const std::vector<int>& perm) const {
    AdjMasks red{};
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (is_red(u, v)) {
          red[perm[u]] |= detail::vbit(perm[v]);
          red[perm[v]] |= detail::vbit(perm[u]);
        }
    return RedBlueGraph(n_, red);
  }

  friend bool operator==(const RedBlueGraph& a, const RedBlueGraph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.red_[v] != b.red_[v]) return false;
    return true;
  }

 private:
  RedBlueGraph(int n, const AdjMasks& red) : n_(n), red_(red) {}
  static void check_order(int n) {
    if (n < 3 || n > kMaxVertices)
      throw std::invalid_argument("vertex count must be in [3, 64]");
  }

  int n_;
  AdjMasks red_;
};

// True iff the c-coloured subgraph has a simple cycle on exactly k vertices.
inline bool cycle_exists(const RedBlueGraph& g, Colour c, int k) {
  if (k < 3 || k > g.order()) throw std::invalid_argument("cycle length out of range");
  AdjMasks m = g.subgraph(c);
  return detail::CycleScan(m.data(), g.vertices()).exists(k);
}

// Least k in [3, n] that lies in 'lens' and is realised in the c-subgraph.
inline std::optional<int> cycle_from_set(const RedBlueGraph& g, Colour c,
                                         const CycleSet& lens) {
  AdjMasks m = g.subgraph(c);
  return detail::CycleScan(m.data(), g.vertices()).first_existing(lens, g.order());
}

inline bool is_avoiding(const RedBlueGraph& g, const CycleSet& red_forbidden,
                        const CycleSet& blue_forbidden) {
  return !cycle_from_set(g, Colour::Red, red_forbidden).has_value() &&
         !cycle_from_set(g, Colour::Blue, blue_forbidden).has_value();
}

// Bipartition of the c-subgraph, or nullopt when it has an odd cycle.
inline std::optional<std::array<VertexMask, 2>> is_bipartite(const RedBlueGraph& g,
                                                             Colour c) {
  AdjMasks m = g.subgraph(c);
  return detail::bipartition_masks(m.data(), g.vertices());
}

// Cycles of every length in [3, |U|] in the c-subgraph induced on U.
inline bool is_pancyclic(const RedBlueGraph& g, Colour c, VertexMask u_set) {
  u_set &= g.vertices();
  int sz = std::popcount(u_set);
  if (sz < 3) throw std::invalid_argument("pancyclicity needs at least 3 vertices");
  AdjMasks m = g.subgraph(c);
  detail::CycleScan scan(m.data(), u_set);
  for (int k = 3; k <= sz; ++k)
    if (!scan.exists(k)) return false;
  return true;
}

inline bool clique_exists(const RedBlueGraph& g, Colour c, int s) {
  if (s < 2 || s > g.order()) throw std::invalid_argument("clique size out of range");
  AdjMasks m = g.subgraph(c);
  return detail::clique_decision(m.data(), g.vertices(), s);
}

}  // namespace ramsey
