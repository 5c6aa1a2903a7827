#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "ramsey/canonical.hpp"
#include "ramsey/cycle_set.hpp"
#include "ramsey/formulas.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/witnesses.hpp"

namespace ramsey {

struct SearchConfig {
  std::uint64_t node_budget = 10'000'000'000ull;  // per subtree task
  int split_depth = 0;     // edge-prefix depth for parallel work splitting
  int threads = 1;
  bool dedupe = true;
  // Vertex relabeling makes it safe to force the first edge red for any pair
  // as long as the unique all-blue colouring is checked separately; disable
  // only to compare against the unpruned reference walk.
  bool fix_first_edge = true;
};

enum class SearchStatus { Found, None, Undecided };

struct ExistsResult {
  SearchStatus status;
  std::optional<RedBlueGraph> witness;
  std::uint64_t explored_nodes = 0;
};

struct EnumerationClass {
  CanonicalKey key;
  RedBlueGraph representative;
};

struct EnumerationResult {
  std::vector<EnumerationClass> classes;  // keys strictly increasing
  std::uint64_t explored_nodes = 0;
  bool exhaustive = true;
};

namespace detail {

// DFS over complete red-blue colourings in vertex-incremental edge order.
// After an edge is coloured, only cycles through that edge whose length is
// forbidden and fits inside the coloured vertex prefix are rechecked, which
// keeps the walk sound: the last-coloured edge of any forbidden cycle lies
// inside the prefix that contains the whole cycle.
class AvoidWalk {
 public:
  AvoidWalk(int n, const CycleSet& red_forbidden, const CycleSet& blue_forbidden) {
    for (int t = 1; t < n; ++t)
      for (int i = 0; i < t; ++i) edges_.emplace_back(i, t);
    for (int k = 3; k <= n; ++k) {
      if (red_forbidden.contains(k)) red_lens_.push_back(k);
      if (blue_forbidden.contains(k)) blue_lens_.push_back(k);
    }
  }

  int edge_count() const { return static_cast<int>(edges_.size()); }

  struct State {
    AdjMasks red{};
    AdjMasks blue{};
  };

  // Replays a colour prefix; returns false if it completes a forbidden cycle.
  bool replay(State& st, const std::vector<Colour>& prefix) const {
    for (std::size_t i = 0; i < prefix.size(); ++i)
      if (!apply(st, static_cast<int>(i), prefix[i])) return false;
    return true;
  }

  bool apply(State& st, int idx, Colour c) const {
    auto [u, v] = edges_[idx];
    AdjMasks& adj = c == Colour::Red ? st.red : st.blue;
    adj[u] |= vbit(v);
    adj[v] |= vbit(u);
    const std::vector<int>& lens = c == Colour::Red ? red_lens_ : blue_lens_;
    VertexMask prefix_mask = all_below(v + 1);
    for (int len : lens) {
      if (len > v + 1) break;
      if (cycle_through_edge(adj.data(), u, v, len, prefix_mask)) {
        undo(st, idx, c);
        return false;
      }
    }
    return true;
  }

  void undo(State& st, int idx, Colour c) const {
    auto [u, v] = edges_[idx];
    AdjMasks& adj = c == Colour::Red ? st.red : st.blue;
    adj[u] &= ~vbit(v);
    adj[v] &= ~vbit(u);
  }

  struct WalkStats {
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    bool stopped = false;  // leaf callback requested stop
  };

  // Continue the walk from 'start_idx' with the state already holding the
  // prefix. on_leaf(state) returns false to stop the whole walk.
  template <class OnLeaf, class ShouldAbort>
  void walk(State& st, int start_idx, bool first_edge_fixed, std::uint64_t budget,
            WalkStats& stats, OnLeaf&& on_leaf, ShouldAbort&& should_abort) const {
    dfs(st, start_idx, first_edge_fixed, budget, stats, on_leaf, should_abort);
  }

 private:
  template <class OnLeaf, class ShouldAbort>
  bool dfs(State& st, int idx, bool first_edge_fixed, std::uint64_t budget,
           WalkStats& stats, OnLeaf& on_leaf, ShouldAbort& should_abort) const {
    if (idx == edge_count()) {
      if (!on_leaf(st)) {
        stats.stopped = true;
        return false;
      }
      return true;
    }
    if (should_abort()) return false;
    for (Colour c : {Colour::Red, Colour::Blue}) {
      if (idx == 0 && first_edge_fixed && c == Colour::Blue) continue;
      if (++stats.nodes > budget) {
        stats.budget_hit = true;
        return false;
      }
      if (!apply(st, idx, c)) continue;
      bool go_on = dfs(st, idx + 1, first_edge_fixed, budget, stats, on_leaf, should_abort);
      undo(st, idx, c);
      if (!go_on) return false;
    }
    return true;
  }

  std::vector<std::pair<int, int>> edges_;
  std::vector<int> red_lens_, blue_lens_;
};

// How the driver treats complete avoiding colourings: stop at the first one,
// fold each into a canonical-key map (memory stays proportional to the class
// count), or keep raw labelled leaves up to a cap.
enum class WalkMode { Existence, DedupeClasses, RawLeaves };

struct TaskOutcome {
  AvoidWalk::WalkStats stats;
  std::vector<RedBlueGraph> leaves;
  std::map<CanonicalKey, RedBlueGraph> classes;
};

// Shared driver: walks all avoiding colourings on n vertices, splitting the
// tree at cfg.split_depth edge prefixes across cfg.threads workers. Merges
// are ordered by task index, so results are deterministic for a fixed
// configuration; in existence mode only the earliest task's leaf survives.
struct DriverResult {
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  bool stopped_early = false;
  std::vector<RedBlueGraph> leaves;
  std::map<CanonicalKey, RedBlueGraph> classes;
};

inline DriverResult drive_avoiding(int n, const CycleSet& red_forbidden,
                                   const CycleSet& blue_forbidden,
                                   const SearchConfig& cfg, WalkMode mode,
                                   std::uint64_t leaf_cap = ~std::uint64_t{0}) {
  AvoidWalk walk(n, red_forbidden, blue_forbidden);
  DriverResult out;
  const bool existence_only = mode == WalkMode::Existence;

  // Leaf handling shared between the serial and task paths; on_found fires
  // only in existence mode.
  auto handle_leaf = [&](TaskOutcome& oc, const AvoidWalk::State& s, auto&& on_found) {
    RedBlueGraph g = RedBlueGraph::from_masks(n, s.red);
    switch (mode) {
      case WalkMode::Existence:
        oc.leaves.push_back(std::move(g));
        on_found();
        return false;
      case WalkMode::DedupeClasses:
        oc.classes.try_emplace(canonical_key(g), std::move(g));
        return true;
      case WalkMode::RawLeaves:
        oc.leaves.push_back(std::move(g));
        return oc.leaves.size() < leaf_cap;
    }
    return false;
  };

  int depth = std::min(cfg.split_depth, walk.edge_count());
  bool parallel = cfg.threads > 1 || depth > 0;

  if (!parallel) {
    AvoidWalk::State st;
    TaskOutcome oc;
    walk.walk(st, 0, cfg.fix_first_edge, cfg.node_budget, oc.stats,
              [&](const AvoidWalk::State& s) { return handle_leaf(oc, s, [] {}); },
              [] { return false; });
    out.nodes = oc.stats.nodes;
    out.budget_hit = oc.stats.budget_hit;
    out.stopped_early = oc.stats.stopped && mode == WalkMode::RawLeaves &&
                        oc.leaves.size() >= leaf_cap;
    out.leaves = std::move(oc.leaves);
    out.classes = std::move(oc.classes);
    return out;
  }

  // Enumerate prefixes of the first 'depth' edges (counting their nodes the
  // same way the flat walk would), then run the subtrees as tasks.
  std::vector<std::vector<Colour>> prefixes;
  AvoidWalk::WalkStats prefix_stats;
  {
    std::vector<Colour> cur;
    AvoidWalk::State st;
    auto rec = [&](auto&& self, int idx) -> void {
      if (prefix_stats.budget_hit) return;
      if (idx == depth) {
        prefixes.push_back(cur);
        return;
      }
      for (Colour c : {Colour::Red, Colour::Blue}) {
        if (idx == 0 && cfg.fix_first_edge && c == Colour::Blue) continue;
        if (++prefix_stats.nodes > cfg.node_budget) {
          prefix_stats.budget_hit = true;
          return;
        }
        if (!walk.apply(st, idx, c)) continue;
        cur.push_back(c);
        self(self, idx + 1);
        cur.pop_back();
        walk.undo(st, idx, c);
      }
    };
    rec(rec, 0);
  }
  out.nodes = prefix_stats.nodes;
  out.budget_hit = prefix_stats.budget_hit;
  if (prefix_stats.budget_hit) return out;

  std::vector<TaskOutcome> outcomes(prefixes.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_found{prefixes.size()};

  auto worker = [&] {
    while (true) {
      std::size_t ti = next.fetch_add(1);
      if (ti >= prefixes.size()) break;
      if (existence_only && first_found.load() < ti) continue;
      AvoidWalk::State st;
      if (!walk.replay(st, prefixes[ti])) continue;  // cannot happen; prefixes are valid
      TaskOutcome& oc = outcomes[ti];
      walk.walk(st, depth, cfg.fix_first_edge, cfg.node_budget, oc.stats,
                [&](const AvoidWalk::State& s) {
                  return handle_leaf(oc, s, [&] {
                    std::size_t cur = first_found.load();
                    while (ti < cur && !first_found.compare_exchange_weak(cur, ti)) {
                    }
                  });
                },
                [&] { return existence_only && first_found.load() < ti; });
    }
  };

  int nthreads = std::max(1, cfg.threads);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (std::size_t ti = 0; ti < outcomes.size(); ++ti) {
    out.nodes += outcomes[ti].stats.nodes;
    if (existence_only) {
      // Budget hits in tasks past the first find are irrelevant.
      if (ti <= first_found.load() || first_found.load() == prefixes.size())
        out.budget_hit |= outcomes[ti].stats.budget_hit;
    } else {
      out.budget_hit |= outcomes[ti].stats.budget_hit;
      out.stopped_early |= outcomes[ti].stats.stopped && outcomes[ti].leaves.size() >= leaf_cap;
    }
  }
  if (existence_only) {
    std::size_t ff = first_found.load();
    if (ff < prefixes.size() && !outcomes[ff].leaves.empty())
      out.leaves.push_back(outcomes[ff].leaves.front());
  } else {
    for (auto& oc : outcomes) {
      for (auto& g : oc.leaves) out.leaves.push_back(std::move(g));
      for (auto& [k, g] : oc.classes) out.classes.try_emplace(k, std::move(g));
    }
  }
  return out;
}

}  // namespace detail

// Is the unique all-blue colouring on n vertices avoiding?
inline bool all_blue_avoiding(const CycleSet& blue_forbidden, int n) {
  for (int k = 3; k <= n; ++k)
    if (blue_forbidden.contains(k)) return false;
  return true;
}

// An avoiding colouring on n vertices, if one exists within budget.
inline ExistsResult exists_avoiding(const CycleSet& red_forbidden,
                                    const CycleSet& blue_forbidden, int n,
                                    const SearchConfig& cfg = {}) {
  if (n < 3 || n > RedBlueGraph::kMaxVertices)
    throw std::invalid_argument("vertex count must be in [3, 64]");
  if (cfg.fix_first_edge && all_blue_avoiding(blue_forbidden, n)) {
    return {SearchStatus::Found, RedBlueGraph::build(n, {}), 0};
  }
  auto res = detail::drive_avoiding(n, red_forbidden, blue_forbidden, cfg,
                                    detail::WalkMode::Existence);
  if (!res.leaves.empty())
    return {SearchStatus::Found, std::move(res.leaves.front()), res.nodes};
  if (res.budget_hit) return {SearchStatus::Undecided, std::nullopt, res.nodes};
  return {SearchStatus::None, std::nullopt, res.nodes};
}

// All avoiding colourings on n vertices up to colour-preserving isomorphism.
inline EnumerationResult enumerate_avoiding(const CycleSet& red_forbidden,
                                            const CycleSet& blue_forbidden, int n,
                                            const SearchConfig& cfg = {}) {
  if (n < 3 || n > RedBlueGraph::kMaxVertices)
    throw std::invalid_argument("vertex count must be in [3, 64]");
  auto mode = cfg.dedupe ? detail::WalkMode::DedupeClasses : detail::WalkMode::RawLeaves;
  auto res = detail::drive_avoiding(n, red_forbidden, blue_forbidden, cfg, mode);
  EnumerationResult out;
  out.explored_nodes = res.nodes;
  out.exhaustive = !res.budget_hit;
  if (cfg.fix_first_edge && all_blue_avoiding(blue_forbidden, n)) {
    RedBlueGraph all_blue = RedBlueGraph::build(n, {});
    if (cfg.dedupe)
      res.classes.try_emplace(canonical_key(all_blue), std::move(all_blue));
    else
      res.leaves.push_back(std::move(all_blue));
  }
  if (cfg.dedupe) {
    for (auto& [k, g] : res.classes) out.classes.push_back({k, std::move(g)});
  } else {
    for (auto& g : res.leaves) {
      CanonicalKey k = canonical_key(g);
      out.classes.push_back({std::move(k), std::move(g)});
    }
  }
  return out;
}

// Walks avoiding colourings (all labelled leaves, not deduplicated) until
// 'visit' returns false or the cap/budget is reached. Used by the property
// suite to sample from the avoiding set.
inline detail::DriverResult for_each_avoiding(const CycleSet& red_forbidden,
                                              const CycleSet& blue_forbidden, int n,
                                              const SearchConfig& cfg,
                                              std::uint64_t leaf_cap) {
  return detail::drive_avoiding(n, red_forbidden, blue_forbidden, cfg,
                                detail::WalkMode::RawLeaves, leaf_cap);
}

struct OracleResult {
  enum class Kind { Value, AboveCap, Undecided };
  Kind kind;
  int value = 0;         // least n with no avoiding colouring, when kind == Value
  int undecided_at = 0;  // n whose search hit the budget, when kind == Undecided
  std::uint64_t explored_nodes = 0;
};

// Least n <= cap such that no avoiding colouring on n vertices exists.
// Avoidance is monotone downward (an induced subgraph of an avoiding
// colouring is avoiding), so the scan stops at the first failure.
inline OracleResult ramsey_oracle(const CycleSet& red_forbidden,
                                  const CycleSet& blue_forbidden, int cap,
                                  const SearchConfig& cfg = {}) {
  if (cap < 3) throw std::invalid_argument("cap must be at least 3");
  OracleResult out{OracleResult::Kind::AboveCap};
  for (int n = 3; n <= cap; ++n) {
    ExistsResult r = exists_avoiding(red_forbidden, blue_forbidden, n, cfg);
    out.explored_nodes += r.explored_nodes;
    if (r.status == SearchStatus::None) {
      out.kind = OracleResult::Kind::Value;
      out.value = n;
      return out;
    }
    if (r.status == SearchStatus::Undecided) {
      out.kind = OracleResult::Kind::Undecided;
      out.undecided_at = n;
      return out;
    }
  }
  return out;
}

// Critical colourings: avoiding colourings on one vertex fewer than the
// pair's Ramsey number. Uses the closed form when it is exact, otherwise
// confirms the value with the oracle first.
inline EnumerationResult enumerate_critical(const CycleSet& red_forbidden,
                                            const CycleSet& blue_forbidden,
                                            const SearchConfig& cfg = {},
                                            int oracle_cap = 13) {
  RamseyVerdict v = generalized_ramsey(red_forbidden, blue_forbidden);
  int value = v.value;
  if (v.status != VerdictStatus::Exact) {
    OracleResult o = ramsey_oracle(red_forbidden, blue_forbidden, oracle_cap, cfg);
    if (o.kind != OracleResult::Kind::Value)
      throw std::runtime_error("Ramsey value not confirmed within cap/budget");
    value = o.value;
  }
  return enumerate_avoiding(red_forbidden, blue_forbidden, value - 1, cfg);
}

namespace detail {

// Walks blue-bipartite colourings on n vertices: for each split (p, q) the
// within-part edges are forced red, the pq cross edges are searched with the
// same incremental cycle rejection. Since every within-part edge exists up
// front, cycle checks run against the full vertex set.
template <class OnLeaf>
inline void walk_blue_bipartite(const CycleSet& red_forbidden,
                                const CycleSet& blue_forbidden, int n,
                                OnLeaf&& on_leaf) {
  std::vector<int> red_lens, blue_even_lens;
  for (int k = 3; k <= n; ++k) {
    if (red_forbidden.contains(k)) red_lens.push_back(k);
    if (k % 2 == 0 && blue_forbidden.contains(k)) blue_even_lens.push_back(k);
  }

  for (int q = 0; q <= n / 2; ++q) {
    int p = n - q;
    // Red cliques inside the parts realise every length up to the part size.
    bool part_violation = false;
    for (int len : red_lens)
      if (len <= p) { part_violation = true; break; }
    if (part_violation) continue;

    AdjMasks red{}, blue{};
    for (int u = 0; u < p; ++u)
      for (int v = u + 1; v < p; ++v) {
        red[u] |= vbit(v);
        red[v] |= vbit(u);
      }
    for (int u = p; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        red[u] |= vbit(v);
        red[v] |= vbit(u);
      }

    std::vector<std::pair<int, int>> cross;
    for (int t = p; t < n; ++t)
      for (int i = 0; i < p; ++i) cross.emplace_back(i, t);

    VertexMask full = all_below(n);
    bool stop = false;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
      if (stop) return;
      if (idx == cross.size()) {
        if (!on_leaf(red, q)) stop = true;
        return;
      }
      auto [u, v] = cross[idx];
      for (Colour c : {Colour::Red, Colour::Blue}) {
        AdjMasks& adj = c == Colour::Red ? red : blue;
        const std::vector<int>& lens = c == Colour::Red ? red_lens : blue_even_lens;
        adj[u] |= vbit(v);
        adj[v] |= vbit(u);
        bool bad = false;
        for (int len : lens)
          if (cycle_through_edge(adj.data(), u, v, len, full)) { bad = true; break; }
        if (!bad) self(self, idx + 1);
        adj[u] &= ~vbit(v);
        adj[v] &= ~vbit(u);
        if (stop) return;
      }
    };
    rec(rec, 0);
    if (stop) return;
  }
}

}  // namespace detail

// Least n <= cap such that every blue-bipartite colouring on n vertices
// contains a forbidden red or blue cycle.
inline OracleResult blue_bipartite_oracle(const CycleSet& red_forbidden,
                                          const CycleSet& blue_forbidden, int cap,
                                          const SearchConfig& = {}) {
  if (cap < 3) throw std::invalid_argument("cap must be at least 3");
  for (int n = 3; n <= cap; ++n) {
    bool found = false;
    detail::walk_blue_bipartite(red_forbidden, blue_forbidden, n,
                                [&](const AdjMasks&, int) {
                                  found = true;
                                  return false;
                                });
    if (!found) return {OracleResult::Kind::Value, n};
  }
  return {OracleResult::Kind::AboveCap};
}

// All avoiding blue-bipartite colourings on n vertices up to isomorphism.
inline EnumerationResult enumerate_blue_bipartite_avoiding(
    const CycleSet& red_forbidden, const CycleSet& blue_forbidden, int n) {
  std::map<CanonicalKey, RedBlueGraph> by_key;
  detail::walk_blue_bipartite(red_forbidden, blue_forbidden, n,
                              [&](const AdjMasks& red, int) {
                                RedBlueGraph g = RedBlueGraph::from_masks(n, red);
                                by_key.try_emplace(canonical_key(g), std::move(g));
                                return true;
                              });
  EnumerationResult out;
  for (auto& [k, g] : by_key) out.classes.push_back({k, std::move(g)});
  return out;
}

struct CharacterizationReport {
  int ramsey_value = 0;
  bool match = false;
  std::vector<CanonicalKey> search_keys;
  std::vector<CanonicalKey> family_keys;
  std::vector<CanonicalKey> missing_from_search;
  std::vector<CanonicalKey> missing_from_family;
};

namespace detail {

inline RedBlueGraph colour_swapped(const RedBlueGraph& g) {
  AdjMasks blue{};
  for (int v = 0; v < g.order(); ++v) blue[v] = g.adj(Colour::Blue, v);
  return RedBlueGraph::from_masks(g.order(), blue);
}

}  // namespace detail

// Compares the searched critical classes against the constructed family for
// pairs whose critical graphs are characterised: blue set starting at 3 or
// at 5 (with even start >= 8) against a long red set, blue set starting at
// an even 4 against red start >= 6, and the colour-swapped orientations.
inline CharacterizationReport check_critical_characterization(
    const CycleSet& red_forbidden, const CycleSet& blue_forbidden,
    const SearchConfig& cfg = {}) {
  MinLengths m = min_lengths(red_forbidden, blue_forbidden);

  bool swap_roles = false;
  auto family_for = [&](const CycleSet& a, const CycleSet& b,
                        MinLengths mm) -> std::vector<FamilyMember> {
    if (mm.blue_min == 3 && mm.red_min >= 5)
      return enumerate_max_bipartite_family(a, b);
    if (mm.blue_min == 5 && mm.red_min >= 6 && mm.blue_even_min >= ExtLen(8))
      return enumerate_max_bipartite_family(a, b);
    if (mm.blue_min == 4 && mm.red_min >= 6)
      return enumerate_star_matching_families(mm.red_min);
    throw std::invalid_argument("pair has no critical characterization");
  };

  std::vector<FamilyMember> family;
  try {
    family = family_for(red_forbidden, blue_forbidden, m);
  } catch (const std::invalid_argument&) {
    swap_roles = true;
    family = family_for(blue_forbidden, red_forbidden, m.swapped());
  }

  CharacterizationReport rep;
  for (const FamilyMember& fm : family) {
    RedBlueGraph g = swap_roles ? detail::colour_swapped(fm.graph) : fm.graph;
    rep.family_keys.push_back(canonical_key(g));
  }
  std::sort(rep.family_keys.begin(), rep.family_keys.end());
  rep.family_keys.erase(std::unique(rep.family_keys.begin(), rep.family_keys.end()),
                        rep.family_keys.end());

  RamseyVerdict v = generalized_ramsey(red_forbidden, blue_forbidden);
  EnumerationResult enumd = enumerate_critical(red_forbidden, blue_forbidden, cfg);
  rep.ramsey_value = v.value;
  for (const auto& c : enumd.classes) rep.search_keys.push_back(c.key);

  std::set_difference(rep.search_keys.begin(), rep.search_keys.end(),
                      rep.family_keys.begin(), rep.family_keys.end(),
                      std::back_inserter(rep.missing_from_family));
  std::set_difference(rep.family_keys.begin(), rep.family_keys.end(),
                      rep.search_keys.begin(), rep.search_keys.end(),
                      std::back_inserter(rep.missing_from_search));
  rep.match = rep.missing_from_search.empty() && rep.missing_from_family.empty() &&
              !rep.search_keys.empty();
  return rep;
}

// Upper-bound check for the star-critical quantity: every colouring of the
// complete graph on 2n-1 vertices minus an (n-3)-star still contains a red
// n-cycle or a blue k-cycle. Every avoiding colouring would restrict to a
// critical colouring on the remaining 2n-2 vertices, so it suffices to try
// both critical classes, every neighbour set of the star centre, and every
// colouring of its incident edges.
struct StarCriticalResult {
  bool holds = false;
  std::uint64_t extensions_checked = 0;
};

inline StarCriticalResult star_critical_upper(int n, int k) {
  if (!((k == 3 && n >= 5) || (k == 5 && n >= 6)))
    throw std::invalid_argument("supported: k=3 with n>=5, or k=5 with n>=6");
  const int h = 2 * n - 2;  // vertices of the complete part
  const int vtx = h;        // the star centre, adjacent to n+1 vertices
  const int picks = n + 1;
  StarCriticalResult res;

  for (bool minus : {false, true}) {
    RedBlueGraph base = build_witness(WitnessSpec::balanced_minus(n, minus));
    AdjMasks red0{}, blue0{};
    for (int v = 0; v < h; ++v) {
      red0[v] = base.adj(Colour::Red, v);
      blue0[v] = base.adj(Colour::Blue, v);
    }
    // All (n+1)-subsets of the h vertices.
    VertexMask subset = detail::all_below(picks);
    VertexMask limit = detail::all_below(h);
    while (subset <= limit && std::popcount(subset) == picks) {
      std::vector<int> members;
      for (VertexMask s = subset; s;) {
        int v = std::countr_zero(s);
        s &= s - 1;
        members.push_back(v);
      }
      for (std::uint32_t bits = 0; bits < (1u << picks); ++bits) {
        AdjMasks red = red0, blue = blue0;
        for (int i = 0; i < picks; ++i) {
          AdjMasks& adj = (bits >> i) & 1 ? red : blue;
          adj[vtx] |= detail::vbit(members[i]);
          adj[members[i]] |= detail::vbit(vtx);
        }
        ++res.extensions_checked;
        VertexMask verts = detail::all_below(h + 1);
        bool red_cycle = detail::CycleScan(red.data(), verts).exists(n);
        bool blue_cycle = !red_cycle && detail::CycleScan(blue.data(), verts).exists(k);
        if (!red_cycle && !blue_cycle) return res;  // avoiding extension found
      }
      // Gosper's hack: next subset of the same popcount.
      VertexMask c = subset & -subset;
      VertexMask r = subset + c;
      subset = (((r ^ subset) >> 2) / c) | r;
    }
  }
  res.holds = true;
  return res;
}

}  // namespace ramsey
