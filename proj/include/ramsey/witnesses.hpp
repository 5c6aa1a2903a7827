#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/canonical.hpp"
#include "ramsey/cycle_set.hpp"
#include "ramsey/formulas.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// Parameterised constructions of avoiding colourings. Naming is structural:
// "biclique" is a complete bipartite graph; the complement of a biclique is
// a disjoint pair of cliques, so each colouring is described by whichever
// side is cleaner to state.
struct WitnessSpec {
  enum class Kind {
    Path4,              // 4 vertices, red subgraph a path of length 3
    Bull5,              // 5 vertices, red subgraph the bull (degrees 1,1,2,3,3)
    Pentagon5,          // 5 vertices, red subgraph a 5-cycle
    BlueBiclique,       // n+k/2-2 vertices, blue = K_{n-1,k/2-1}, rest red
    RedBiclique,        // 2k-2 vertices, red = K_{k-1,k-1}
    BlueBalanced,       // 2n-2 vertices, blue = K_{n-1,n-1}
    HubStarBiclique,    // blue biclique (n-1, k/2-1) with s red cross edges at
                        // one hub vertex in the large part
    SideStarBiclique,   // parts n-2 and k/2; one small-part vertex sends s red
                        // cross edges, every other cross edge blue
    CliquePairCross,    // two red K_{n-1}; 0, 1 or 2 disjoint red cross edges
    BalancedMinusEdge,  // blue = K_{n-1,n-1}, optionally minus one edge
    StarMatching        // n vertices, blue = hub star plus a matching
  };

  Kind kind;
  int n = 0;
  int k = 0;
  int star = 0;        // HubStarBiclique / SideStarBiclique red star size
  int cross = 0;       // CliquePairCross: 0, 1, or 2 (disjoint)
  bool minus_edge = false;
  int variant = 0;     // StarMatching: 1, 2 or 3
  std::vector<std::pair<int, int>> matching;  // StarMatching edges

  static WitnessSpec path4() { return {Kind::Path4}; }
  static WitnessSpec bull5() { return {Kind::Bull5}; }
  static WitnessSpec pentagon5() { return {Kind::Pentagon5}; }
  static WitnessSpec blue_biclique(int n, int k) { return {Kind::BlueBiclique, n, k}; }
  static WitnessSpec red_biclique(int k) { return {Kind::RedBiclique, 0, k}; }
  static WitnessSpec blue_balanced(int n) { return {Kind::BlueBalanced, n}; }
  static WitnessSpec hub_star(int n, int k, int s) {
    return {Kind::HubStarBiclique, n, k, s};
  }
  static WitnessSpec side_star(int n, int k, int s) {
    return {Kind::SideStarBiclique, n, k, s};
  }
  static WitnessSpec clique_pair(int n, int cross) {
    WitnessSpec w{Kind::CliquePairCross, n};
    w.cross = cross;
    return w;
  }
  static WitnessSpec balanced_minus(int n, bool minus) {
    WitnessSpec w{Kind::BalancedMinusEdge, n};
    w.minus_edge = minus;
    return w;
  }
  static WitnessSpec star_matching(int variant, int n,
                                   std::vector<std::pair<int, int>> matching) {
    WitnessSpec w{Kind::StarMatching, n};
    w.variant = variant;
    w.matching = std::move(matching);
    return w;
  }

  // Vertex count the construction is defined to have.
  int expected_vertices() const {
    switch (kind) {
      case Kind::Path4: return 4;
      case Kind::Bull5:
      case Kind::Pentagon5: return 5;
      case Kind::BlueBiclique:
      case Kind::HubStarBiclique:
      case Kind::SideStarBiclique: return n + k / 2 - 2;
      case Kind::RedBiclique: return 2 * k - 2;
      case Kind::BlueBalanced:
      case Kind::CliquePairCross:
      case Kind::BalancedMinusEdge: return 2 * n - 2;
      case Kind::StarMatching: return n;
    }
    return 0;
  }

  std::string to_string() const {
    auto nk = [&] { return "n=" + std::to_string(n) + ",k=" + std::to_string(k); };
    switch (kind) {
      case Kind::Path4: return "path4";
      case Kind::Bull5: return "bull5";
      case Kind::Pentagon5: return "pentagon5";
      case Kind::BlueBiclique: return "bluebiclique:" + nk();
      case Kind::RedBiclique: return "redbiclique:k=" + std::to_string(k);
      case Kind::BlueBalanced: return "bluebalanced:n=" + std::to_string(n);
      case Kind::HubStarBiclique: return "hubstar:" + nk() + ",s=" + std::to_string(star);
      case Kind::SideStarBiclique: return "sidestar:" + nk() + ",s=" + std::to_string(star);
      case Kind::CliquePairCross:
        return "cliquepair:n=" + std::to_string(n) + ",cross=" + std::to_string(cross);
      case Kind::BalancedMinusEdge:
        return "balancedminus:n=" + std::to_string(n) + ",minus=" + (minus_edge ? "1" : "0");
      case Kind::StarMatching: {
        std::string m;
        for (auto [a, b] : matching) {
          if (!m.empty()) m += ';';
          m += std::to_string(a) + "-" + std::to_string(b);
        }
        return "starmatching:i=" + std::to_string(variant) + ",n=" + std::to_string(n) +
               ",m=" + m;
      }
    }
    return "?";
  }
};

namespace detail {

inline void add_clique(std::vector<std::pair<int, int>>& edges, int lo, int hi) {
  for (int u = lo; u < hi; ++u)
    for (int v = u + 1; v < hi; ++v) edges.emplace_back(u, v);
}

inline void add_cross(std::vector<std::pair<int, int>>& edges, int lo1, int hi1,
                      int lo2, int hi2) {
  for (int u = lo1; u < hi1; ++u)
    for (int v = lo2; v < hi2; ++v) edges.emplace_back(u, v);
}

}  // namespace detail

inline RedBlueGraph build_witness(const WitnessSpec& w) {
  using Kind = WitnessSpec::Kind;
  std::vector<std::pair<int, int>> red;
  switch (w.kind) {
    case Kind::Path4:
      red = {{0, 1}, {1, 2}, {2, 3}};
      return RedBlueGraph::build(4, red);

    case Kind::Bull5: {
      red = {{0, 1}, {1, 2}, {2, 3}, {1, 3}, {2, 4}};
      RedBlueGraph g = RedBlueGraph::build(5, red);
      auto degrees = [&](Colour c) {
        std::vector<int> d;
        for (int v = 0; v < 5; ++v) d.push_back(g.degree(c, v));
        std::sort(d.begin(), d.end());
        return d;
      };
      std::vector<int> want{1, 1, 2, 3, 3};
      if (degrees(Colour::Red) != want || degrees(Colour::Blue) != want)
        throw std::logic_error("bull colouring is not self-complementary");
      return g;
    }

    case Kind::Pentagon5:
      red = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
      return RedBlueGraph::build(5, red);

    case Kind::BlueBiclique: {
      if (w.k < 4 || w.k % 2 != 0) throw std::invalid_argument("k must be even, >= 4");
      if (2 * w.n < w.k) throw std::invalid_argument("needs n >= k/2");
      int p = w.n - 1, total = w.n + w.k / 2 - 2;
      detail::add_clique(red, 0, p);
      detail::add_clique(red, p, total);
      return RedBlueGraph::build(total, red);
    }

    case Kind::RedBiclique: {
      if (w.k < 3) throw std::invalid_argument("k must be >= 3");
      int p = w.k - 1, total = 2 * w.k - 2;
      detail::add_cross(red, 0, p, p, total);
      return RedBlueGraph::build(total, red);
    }

    case Kind::BlueBalanced: {
      if (w.n < 3) throw std::invalid_argument("n must be >= 3");
      int p = w.n - 1, total = 2 * w.n - 2;
      detail::add_clique(red, 0, p);
      detail::add_clique(red, p, total);
      return RedBlueGraph::build(total, red);
    }

    case Kind::HubStarBiclique: {
      if (w.k < 4 || w.k % 2 != 0) throw std::invalid_argument("k must be even, >= 4");
      if (2 * w.n <= w.k) throw std::invalid_argument("needs 2n > k");
      if (w.n == 3 && w.k == 4) throw std::invalid_argument("(3,4) is excluded");
      if (w.star < 0 || w.star > w.k / 2 - 1)
        throw std::invalid_argument("red star size out of range");
      int p = w.n - 1, total = w.n + w.k / 2 - 2;
      detail::add_clique(red, 0, p);
      detail::add_clique(red, p, total);
      for (int j = 0; j < w.star; ++j) red.emplace_back(0, p + j);  // hub = 0
      return RedBlueGraph::build(total, red);
    }

    case Kind::SideStarBiclique: {
      if (w.k < 4 || w.k % 2 != 0) throw std::invalid_argument("k must be even, >= 4");
      if (w.n < 4) throw std::invalid_argument("needs n >= 4");
      if (2 * w.n <= w.k) throw std::invalid_argument("needs 2n > k");
      if (w.star != w.n - 3 && w.star != w.n - 2)
        throw std::invalid_argument("red star size must be n-3 or n-2");
      int p = w.n - 2, total = w.n + w.k / 2 - 2;
      detail::add_clique(red, 0, p);
      detail::add_clique(red, p, total);
      for (int j = 0; j < w.star; ++j) red.emplace_back(p, j);  // x = first small vertex
      return RedBlueGraph::build(total, red);
    }

    case Kind::CliquePairCross: {
      if (w.n < 3) throw std::invalid_argument("n must be >= 3");
      if (w.cross < 0 || w.cross > 2) throw std::invalid_argument("cross must be 0, 1 or 2");
      if (w.cross == 2 && w.n != 3)
        throw std::invalid_argument("two disjoint cross edges only at n = 3");
      int p = w.n - 1, total = 2 * w.n - 2;
      detail::add_clique(red, 0, p);
      detail::add_clique(red, p, total);
      if (w.cross >= 1) red.emplace_back(0, p);
      if (w.cross == 2) red.emplace_back(1, p + 1);
      return RedBlueGraph::build(total, red);
    }

    case Kind::BalancedMinusEdge: {
      if (w.n < 3) throw std::invalid_argument("n must be >= 3");
      int p = w.n - 1, total = 2 * w.n - 2;
      detail::add_clique(red, 0, p);
      detail::add_clique(red, p, total);
      if (w.minus_edge) red.emplace_back(0, p);
      return RedBlueGraph::build(total, red);
    }

    case Kind::StarMatching: {
      // Blue subgraph on {v} + X + {y} with v = 0, X = 1..n-2, y = n-1.
      if (w.n < 6) throw std::invalid_argument("star-matching families need n >= 6");
      if (w.variant < 1 || w.variant > 3) throw std::invalid_argument("variant must be 1..3");
      const int v = 0, y = w.n - 1, xlast = w.n - 2;
      std::vector<std::pair<int, int>> blue;
      for (int x = 1; x <= w.n - 2; ++x) blue.emplace_back(v, x);
      if (w.variant == 3) blue.emplace_back(v, y);
      if (w.variant == 2) blue.emplace_back(y, xlast);

      std::vector<int> deg(w.n, 0);
      bool xlast_matched = false;
      for (auto [a, b] : w.matching) {
        int lo = 1, hi = w.variant == 2 ? w.n - 2 : w.n - 1;
        if (a < lo || a > hi || b < lo || b > hi || a == b)
          throw std::invalid_argument("matching edge outside its host set");
        if (++deg[a] > 1 || ++deg[b] > 1)
          throw std::invalid_argument("matching description is not a matching");
        if (a == xlast || b == xlast) xlast_matched = true;
        blue.emplace_back(a, b);
      }
      if (w.variant == 2 && !xlast_matched)
        throw std::invalid_argument("variant 2 requires the attachment vertex matched");

      AdjMasks blue_adj{};
      for (auto [a, b] : blue) {
        blue_adj[a] |= detail::vbit(b);
        blue_adj[b] |= detail::vbit(a);
      }
      AdjMasks red_adj{};
      VertexMask full = detail::all_below(w.n);
      for (int u = 0; u < w.n; ++u) red_adj[u] = ~blue_adj[u] & full & ~detail::vbit(u);
      return RedBlueGraph::from_masks(w.n, red_adj);
    }
  }
  throw std::logic_error("unknown witness kind");
}

struct WitnessReport {
  bool avoiding;
  int vertex_count;
  int expected_vertex_count;
  std::optional<int> red_cycle;   // shortest offending length, if any
  std::optional<int> blue_cycle;

  bool ok() const { return avoiding && vertex_count == expected_vertex_count; }
};

inline WitnessReport verify_witness(const WitnessSpec& spec, const CycleSet& red_set,
                                    const CycleSet& blue_set) {
  RedBlueGraph g = build_witness(spec);
  auto rc = cycle_from_set(g, Colour::Red, red_set);
  auto bc = cycle_from_set(g, Colour::Blue, blue_set);
  return {!rc && !bc, g.order(), spec.expected_vertices(), rc, bc};
}

struct FamilyMember {
  WitnessSpec spec;
  RedBlueGraph graph;
  CanonicalKey key;
};

namespace detail {

// All matchings (including empty and partial ones) on the vertex list.
inline void all_matchings(const std::vector<int>& verts, std::size_t i,
                          std::vector<bool>& used,
                          std::vector<std::pair<int, int>>& cur,
                          std::vector<std::vector<std::pair<int, int>>>& out) {
  while (i < verts.size() && used[i]) ++i;
  if (i >= verts.size()) {
    out.push_back(cur);
    return;
  }
  used[i] = true;
  all_matchings(verts, i + 1, used, cur, out);  // leave verts[i] unmatched
  for (std::size_t j = i + 1; j < verts.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    cur.emplace_back(verts[i], verts[j]);
    all_matchings(verts, i + 1, used, cur, out);
    cur.pop_back();
    used[j] = false;
  }
  used[i] = false;
}

inline std::vector<std::vector<std::pair<int, int>>> matchings_on(
    const std::vector<int>& verts) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<bool> used(verts.size(), false);
  std::vector<std::pair<int, int>> cur;
  all_matchings(verts, 0, used, cur, out);
  return out;
}

inline std::vector<FamilyMember> dedupe(std::vector<FamilyMember> members) {
  std::map<CanonicalKey, FamilyMember> by_key;
  for (auto& m : members) by_key.try_emplace(m.key, std::move(m));
  std::vector<FamilyMember> out;
  out.reserve(by_key.size());
  for (auto& [k, m] : by_key) out.push_back(std::move(m));
  return out;
}

}  // namespace detail

// The critical families for pairs whose blue set starts at an even length 4:
// a hub star on X with a matching, in three attachment variants.
inline std::vector<FamilyMember> enumerate_star_matching_families(int n) {
  if (n < 6 || n > 10) throw std::invalid_argument("family enumeration supports 6 <= n <= 10");
  std::vector<FamilyMember> members;
  auto push = [&](const WitnessSpec& s) {
    RedBlueGraph g = build_witness(s);
    members.push_back({s, g, canonical_key(g)});
  };

  std::vector<int> x_and_y, x_only;
  for (int x = 1; x <= n - 2; ++x) x_only.push_back(x);
  x_and_y = x_only;
  x_and_y.push_back(n - 1);

  for (auto& m : detail::matchings_on(x_and_y)) push(WitnessSpec::star_matching(1, n, m));
  for (auto& m : detail::matchings_on(x_only)) {
    bool covers_last = false;
    for (auto [a, b] : m) covers_last |= (a == n - 2 || b == n - 2);
    if (covers_last) push(WitnessSpec::star_matching(2, n, m));
  }
  for (auto& m : detail::matchings_on(x_and_y)) push(WitnessSpec::star_matching(3, n, m));

  return detail::dedupe(std::move(members));
}

// Both balanced-biclique critical colourings (with and without the flipped edge).
inline std::vector<FamilyMember> enumerate_balanced_critical(int n) {
  std::vector<FamilyMember> members;
  for (bool minus : {false, true}) {
    WitnessSpec s = WitnessSpec::balanced_minus(n, minus);
    RedBlueGraph g = build_witness(s);
    members.push_back({s, g, canonical_key(g)});
  }
  return detail::dedupe(std::move(members));
}

// All blue-bipartite avoiding colourings on the maximum vertex count for the
// pair, assembled from the star constructions; the shape depends on whether
// twice the shortest red length passes the shortest even blue length.
inline std::vector<FamilyMember> enumerate_max_bipartite_family(const CycleSet& red_set,
                                                                const CycleSet& blue_set) {
  MinLengths m = min_lengths(red_set, blue_set);
  int n = m.red_min;
  std::vector<FamilyMember> members;
  auto push = [&](const WitnessSpec& s) {
    RedBlueGraph g = build_witness(s);
    members.push_back({s, g, canonical_key(g)});
  };

  bool tall = m.blue_even_min.is_finite() &&
              2 * n > m.blue_even_min.value() &&
              !(n == 3 && m.blue_even_min == ExtLen(4));
  if (tall) {
    int k = m.blue_even_min.value();
    for (int s = 0; s <= k / 2 - 1; ++s) push(WitnessSpec::hub_star(n, k, s));
    if (n >= 4)
      for (int s : {n - 3, n - 2}) push(WitnessSpec::side_star(n, k, s));
  } else {
    if (n >= 4) {
      for (int cross : {0, 1}) push(WitnessSpec::clique_pair(n, cross));
    } else {
      // n = 3: tiny side conditions on which cross counts stay avoiding.
      bool zero_ok = !m.blue_even_min.is_finite() || m.blue_even_min.value() >= 6;
      bool two_ok = m.red_even_min >= ExtLen(6);
      if (zero_ok) push(WitnessSpec::clique_pair(3, 0));
      push(WitnessSpec::clique_pair(3, 1));
      if (two_ok) push(WitnessSpec::clique_pair(3, 2));
    }
  }
  return detail::dedupe(std::move(members));
}

// Declared witness catalog: every construction, its parameter ranges, and
// the cycle-set pair it must avoid. Used by the verification suite.
struct CatalogEntry {
  WitnessSpec spec;
  std::string red_set;
  std::string blue_set;
};

inline std::vector<CatalogEntry> witness_catalog(int max_n, int max_k) {
  std::vector<CatalogEntry> out;
  auto tail = [](int m) { return ">=" + std::to_string(m); };
  auto tail_odd = [&](int m) { return tail(m) + ",odd"; };

  out.push_back({WitnessSpec::path4(), "all", "all"});
  out.push_back({WitnessSpec::bull5(), ">=4", ">=4"});
  out.push_back({WitnessSpec::pentagon5(), "<=4", "<=4"});

  for (int k = 4; k <= max_k; k += 2) {
    for (int n = (k + 1) / 2; n <= max_n; ++n) {
      if (n < 3 || 2 * n < k) continue;
      out.push_back({WitnessSpec::blue_biclique(n, k), tail(n), tail_odd(k)});
    }
    out.push_back({WitnessSpec::red_biclique(k), tail_odd(2 * k), tail(k)});
  }
  for (int n = 3; n <= max_n; ++n)
    out.push_back({WitnessSpec::blue_balanced(n), tail(n), tail_odd(2 * n)});

  for (int k = 4; k <= max_k; k += 2)
    for (int n = 3; n <= max_n; ++n) {
      if (2 * n <= k || (n == 3 && k == 4)) continue;
      for (int s = 0; s <= k / 2 - 1; ++s)
        out.push_back({WitnessSpec::hub_star(n, k, s), tail(n), tail_odd(k)});
      if (n >= 4)
        for (int s : {n - 3, n - 2})
          out.push_back({WitnessSpec::side_star(n, k, s), tail(n), tail_odd(k)});
    }

  for (int n = 4; n <= max_n; ++n)
    for (int cross : {0, 1})
      out.push_back({WitnessSpec::clique_pair(n, cross), tail(n), tail_odd(2 * n)});
  out.push_back({WitnessSpec::clique_pair(3, 0), "all", tail_odd(6)});
  out.push_back({WitnessSpec::clique_pair(3, 1), "all", tail_odd(4)});
  out.push_back({WitnessSpec::clique_pair(3, 2), "3,>=5", tail_odd(6)});

  for (int n = 5; n <= max_n; ++n)
    for (bool minus : {false, true}) {
      out.push_back({WitnessSpec::balanced_minus(n, minus), std::to_string(n), "3"});
      if (n >= 6)
        out.push_back({WitnessSpec::balanced_minus(n, minus), std::to_string(n), "5"});
    }

  for (int n = 6; n <= std::min(max_n, 10); ++n)
    for (const FamilyMember& fm : enumerate_star_matching_families(n))
      out.push_back({fm.spec, tail(n), ">=4"});

  return out;
}

}  // namespace ramsey
