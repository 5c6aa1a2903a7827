#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

// Exhaustive (n <= 7) or sampled verification of the structural properties
// the formulas rest on. A counterexample would mean an implementation bug,
// so the suite doubles as a deep self-check of the cycle machinery.
struct LemmaReport {
  std::string id;
  int n = 0;
  std::uint64_t checked = 0;          // colourings inspected
  std::uint64_t hypothesis_hits = 0;  // colourings meeting the hypothesis
  std::vector<std::string> counterexamples;  // graph6 of the red subgraph
  bool exhaustive = false;

  bool pass() const { return counterexamples.empty(); }
};

namespace detail {

struct ColouringView {
  int n;
  AdjMasks red{}, blue{};

  ColouringView(int n_, std::uint64_t edge_bits) : n(n_) {
    int idx = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++idx) {
        AdjMasks& adj = (edge_bits >> idx) & 1 ? red : blue;
        adj[u] |= vbit(v);
        adj[v] |= vbit(u);
      }
  }

  bool red_cycle(int k) const { return scan(red).exists(k); }
  bool blue_cycle(int k) const { return scan(blue).exists(k); }
  bool mono_cycle(int k) const { return red_cycle(k) || blue_cycle(k); }
  bool mono_cycle_at_least(int lo) const {
    for (int k = lo; k <= n; ++k)
      if (mono_cycle(k)) return true;
    return false;
  }
  bool blue_bipartite() const {
    return bipartition_masks(blue.data(), all_below(n)).has_value();
  }
  CycleScan scan(const AdjMasks& adj) const { return CycleScan(adj.data(), all_below(n)); }

  std::string graph6() const {
    return pack_graph6(n, triangle_bits_from_masks(red, n));
  }
};

// A cycle of exactly k vertices, as an ordered vertex list. Only called when
// existence is already known, so the plain anchored walk terminates fast.
inline std::optional<std::vector<int>> find_cycle(const AdjMasks& adj, int n, int k) {
  VertexMask verts = all_below(n);
  std::vector<int> path;
  auto rec = [&](auto&& self, int anchor, int u, VertexMask used, int cnt) -> bool {
    if (cnt == k) return (adj[u] & vbit(anchor)) != 0;
    VertexMask cand = adj[u] & verts & ~used & ~(vbit(anchor) - 1);
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      path.push_back(w);
      if (self(self, anchor, w, used | vbit(w), cnt + 1)) return true;
      path.pop_back();
    }
    return false;
  };
  for (int a = 0; a < n; ++a) {
    path.assign(1, a);
    if (rec(rec, a, a, vbit(a), 1)) return path;
  }
  return std::nullopt;
}

}  // namespace detail

namespace detail {

// Property bodies. Each returns true when the colouring satisfies the
// statement (vacuously if the hypothesis fails) and bumps 'hits' when the
// hypothesis applied.

inline bool check_L34(const ColouringView& g, std::uint64_t& hits) {
  bool ok = true;
  for (int k = 4; k <= g.n; k += 2)
    for (int m = std::max(k, 5); m <= g.n; ++m) {
      if (m + k / 2 - 1 != g.n) continue;
      ++hits;
      if (!(g.mono_cycle_at_least(m) || g.blue_cycle(k))) ok = false;
    }
  return ok;
}

inline bool check_L35a(const ColouringView& g, std::uint64_t& hits) {
  for (int m = 3; 2 * m + 1 <= g.n; ++m)
    if (g.mono_cycle(2 * m + 1)) {
      ++hits;
      if (!g.mono_cycle(2 * m)) return false;
    }
  return true;
}

inline bool check_L35b(const ColouringView& g, std::uint64_t& hits) {
  for (int m = 3; 2 * m <= g.n; ++m)
    if (g.mono_cycle(2 * m)) {
      ++hits;
      if (!g.mono_cycle(2 * m - 2)) return false;
    }
  return true;
}

inline bool check_L36(const ColouringView& g, std::uint64_t& hits) {
  for (int k = 4; k <= g.n; k += 2)
    for (int m = k; m <= g.n; ++m)
      if (g.blue_cycle(m)) {
        ++hits;
        if (!(g.red_cycle(m) || g.blue_cycle(k))) return false;
      }
  return true;
}

inline bool check_L37(const ColouringView& g, std::uint64_t& hits) {
  if (g.blue_cycle(3)) return true;
  ++hits;
  return g.red_cycle(g.n) || g.blue_bipartite();
}

inline bool check_L38(const ColouringView& g, std::uint64_t& hits) {
  // Hypothesis on a vertex set U of size m >= 6: the blue subgraph inside U
  // packs into one m-cycle (max degree 2, no short blue cycle), which is
  // exactly "some m-cycle on U has all chords red".
  for (int m = 6; m <= g.n; ++m) {
    VertexMask subset = all_below(m);
    VertexMask limit = all_below(g.n);
    while (subset <= limit) {
      if (std::popcount(subset) == m) {
        bool hyp = true;
        VertexMask it = subset;
        while (it) {
          int v = std::countr_zero(it);
          it &= it - 1;
          if (std::popcount(g.blue[v] & subset) > 2) { hyp = false; break; }
        }
        if (hyp) {
          CycleScan scan(g.blue.data(), subset);
          for (int len = 3; len < m && hyp; ++len)
            if (scan.exists(len)) hyp = false;
        }
        if (hyp) {
          ++hits;
          CycleScan red_scan(g.red.data(), subset);
          for (int len = 3; len <= m; ++len)
            if (!red_scan.exists(len)) return false;
        }
      }
      VertexMask c = subset & -subset;
      VertexMask r = subset + c;
      subset = (((r ^ subset) >> 2) / c) | r;
      if (c == 0) break;
    }
  }
  return true;
}

inline bool check_L311(const ColouringView& g, std::uint64_t& hits) {
  if (g.blue_cycle(5)) return true;
  for (int m = 5; m <= g.n; ++m)
    if (g.red_cycle(m)) {
      ++hits;
      if (!(g.red_cycle(m - 1) || g.red_cycle(m - 2))) return false;
    }
  return true;
}

inline bool check_L312(const ColouringView& g, std::uint64_t& hits) {
  if (g.blue_cycle(5)) return true;
  for (int m = 7; m <= g.n - 1; ++m)
    if (g.red_cycle(m)) {
      ++hits;
      if (!g.red_cycle(m - 1)) return false;
    }
  return true;
}

inline bool check_L313(const ColouringView& g, std::uint64_t& hits) {
  if (g.blue_cycle(5)) return true;
  for (int m = 4; m <= g.n - 1; ++m) {
    if (!g.red_cycle(m)) continue;
    auto cyc = find_cycle(g.red, g.n, m);
    if (!cyc) continue;
    VertexMask on_cycle = 0;
    for (int v : *cyc) on_cycle |= vbit(v);
    for (int x = 0; x < g.n; ++x) {
      if (on_cycle & vbit(x)) continue;
      for (int i = 0; i < m; ++i) {
        if (!((g.red[x] >> (*cyc)[i]) & 1)) continue;
        for (int j : {1, m - 1}) {
          int other = (*cyc)[(i + j) % m];
          if ((g.red[x] >> other) & 1) {
            ++hits;
            if (!g.red_cycle(m + 1)) return false;
          }
        }
        for (int j = 3; j <= m - 3; ++j) {
          int other = (*cyc)[(i + j) % m];
          if ((g.red[x] >> other) & 1) {
            ++hits;
            if (!g.red_cycle(m + 1)) return false;
          }
        }
      }
    }
  }
  return true;
}

inline bool check_P310(const ColouringView& g, std::uint64_t& hits) {
  if (g.blue_bipartite() || g.blue_cycle(5)) return true;
  ++hits;
  for (int len = 6; len <= g.n - 2; ++len)
    if (!g.red_cycle(len)) return false;
  return true;
}

inline bool check_L39(const ColouringView& g, std::uint64_t& hits) {
  // Red subgraph hamiltonian with at least n^2/4 edges is red pancyclic or
  // exactly a balanced complete bipartite red graph.
  int edges = 0;
  for (int v = 0; v < g.n; ++v) edges += std::popcount(g.red[v]);
  edges /= 2;
  if (4 * edges < g.n * g.n || !g.red_cycle(g.n)) return true;
  ++hits;
  CycleScan scan(g.red.data(), all_below(g.n));
  bool pan = true;
  for (int len = 3; len <= g.n && pan; ++len)
    if (!scan.exists(len)) pan = false;
  if (pan) return true;
  if (g.n % 2 != 0) return false;
  auto bp = bipartition_masks(g.red.data(), all_below(g.n));
  if (!bp) return false;
  if (std::popcount((*bp)[0]) != g.n / 2) return false;
  return edges == (g.n / 2) * (g.n / 2);
}

}  // namespace detail

// Hypothesis-respecting run for the blue-bipartiteness property: avoiding
// colourings are far too rare for uniform sampling, so they are generated by
// the pruned search itself and each one is checked to be blue bipartite.
inline LemmaReport verify_blue_bipartite_property(int n, const SearchConfig& base_cfg) {
  LemmaReport rep;
  rep.id = "P4.9";
  rep.n = n;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int g1 = 5; g1 <= n; ++g1)
    pairs.emplace_back(std::to_string(g1), "3");
  pairs.emplace_back(">=5", "3");
  if (n >= 8) pairs.emplace_back("6", "5");  // needs two spare vertices

  for (auto& [a, b] : pairs) {
    CycleSet red_set = CycleSet::parse(a);
    CycleSet blue_set = CycleSet::parse(b);
    SearchConfig cfg = base_cfg;
    cfg.fix_first_edge = true;
    cfg.split_depth = 0;
    cfg.threads = 1;
    cfg.node_budget = std::min<std::uint64_t>(cfg.node_budget, 20'000'000);
    int min_size = red_set.min_length() + (blue_set.min_length() == 5 ? 2 : 0);
    for (int sz = std::max(3, min_size); sz <= n; ++sz) {
      auto res = for_each_avoiding(red_set, blue_set, sz, cfg, 5000);
      for (const RedBlueGraph& g : res.leaves) {
        ++rep.checked;
        ++rep.hypothesis_hits;
        if (!is_bipartite(g, Colour::Blue)) {
          if (rep.counterexamples.size() < 5)
            rep.counterexamples.push_back(graph6_encode(g));
        }
      }
    }
  }
  return rep;
}

inline LemmaReport verify_lemma(std::string_view id, int n,
                                std::uint64_t samples = 1'000'000,
                                std::uint64_t seed = 20240801,
                                const SearchConfig& cfg = {}) {
  // Edge bits of one colouring must fit a single word: C(11,2) = 55.
  if (n < 3 || n > 11) throw std::invalid_argument("lemma checks support 3 <= n <= 11");
  if (id == "P4.9") return verify_blue_bipartite_property(n, cfg);

  bool (*check)(const detail::ColouringView&, std::uint64_t&) = nullptr;
  if (id == "L3.4") check = detail::check_L34;
  else if (id == "L3.5a") check = detail::check_L35a;
  else if (id == "L3.5b") check = detail::check_L35b;
  else if (id == "L3.6") check = detail::check_L36;
  else if (id == "L3.7") check = detail::check_L37;
  else if (id == "L3.8") check = detail::check_L38;
  else if (id == "L3.11") check = detail::check_L311;
  else if (id == "L3.12") check = detail::check_L312;
  else if (id == "L3.13") check = detail::check_L313;
  else if (id == "P3.10") check = detail::check_P310;
  else if (id == "L3.9" || id == "L3.9-optional") check = detail::check_L39;
  else throw std::invalid_argument("unknown lemma id: " + std::string(id));

  LemmaReport rep;
  rep.id = std::string(id);
  rep.n = n;
  const int nedges = n * (n - 1) / 2;
  rep.exhaustive = nedges <= 22;

  auto inspect = [&](std::uint64_t bits) {
    detail::ColouringView g(n, bits);
    ++rep.checked;
    if (!check(g, rep.hypothesis_hits) && rep.counterexamples.size() < 5)
      rep.counterexamples.push_back(g.graph6());
  };

  if (rep.exhaustive) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << nedges); ++bits) inspect(bits);
  } else {
    std::mt19937_64 rng(seed);
    std::uint64_t mask = nedges >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nedges) - 1;
    for (std::uint64_t i = 0; i < samples; ++i) inspect(rng() & mask);
  }
  return rep;
}

inline std::vector<std::string> lemma_catalog() {
  return {"L3.4", "L3.5a", "L3.5b", "L3.6", "L3.7", "L3.8",
          "L3.11", "L3.12", "L3.13", "P3.10", "P4.9", "L3.9"};
}

}  // namespace ramsey
