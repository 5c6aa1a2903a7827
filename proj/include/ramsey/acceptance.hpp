#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ramsey/cycle_set.hpp"
#include "ramsey/formulas.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/lemmas.hpp"
#include "ramsey/search.hpp"
#include "ramsey/witnesses.hpp"

namespace ramsey::acceptance {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

struct Options {
  int threads = 2;
  int split_depth = 6;
  std::uint64_t oracle_budget = 2'000'000'000ull;      // catalog runs
  std::uint64_t conjecture_budget = 10'000'000ull;     // per-task budget for the ledger
  std::uint64_t samples = 1'000'000;
};

namespace detail_acc {

inline SearchConfig search_cfg(const Options& o) {
  SearchConfig cfg;
  cfg.threads = o.threads;
  cfg.split_depth = o.threads > 1 ? o.split_depth : 0;
  cfg.node_budget = o.oracle_budget;
  return cfg;
}

// Independent graph6 reader: arithmetic bit extraction, adjacency matrix
// output. Deliberately shares no code with the production decoder.
inline bool reference_graph6_matches(const std::string& line, const RedBlueGraph& g) {
  if (line.empty()) return false;
  int n = line[0] - 63;
  if (n != g.order()) return false;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  long bit_index = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      long group = bit_index / 6, offset = bit_index % 6;
      if (1 + group >= static_cast<long>(line.size())) return false;
      int value = line[1 + group] - 63;
      int bit = (value / (1 << (5 - offset))) % 2;
      adj[row][col] = adj[col][row] = bit == 1;
      ++bit_index;
    }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adj[u][v] != g.is_red(u, v)) return false;
  return true;
}

inline RedBlueGraph random_graph(std::mt19937_64& rng, int n) {
  AdjMasks red{};
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1) {
        red[u] |= ramsey::detail::vbit(v);
        red[v] |= ramsey::detail::vbit(u);
      }
  return RedBlueGraph::from_masks(n, red);
}

template <class Body>
inline CriterionResult timed(int id, std::string name, Body&& body) {
  auto start = std::chrono::steady_clock::now();
  CriterionResult res{id, std::move(name), false, "", 0.0};
  try {
    body(res);
  } catch (const std::exception& e) {
    res.pass = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace detail_acc

// 1. Closed form agrees with the classical single-cycle values, exactly.
inline CriterionResult criterion1(const Options&) {
  return detail_acc::timed(1, "singleton cross-check", [&](CriterionResult& res) {
    int checked = 0;
    for (int n = 3; n <= 100; ++n)
      for (int k = 3; k <= n; ++k) {
        RamseyVerdict v = generalized_ramsey(CycleSet::single(n), CycleSet::single(k));
        int want = classical_cycle_ramsey(n, k);
        if (v.value != want || v.status != VerdictStatus::Exact) {
          res.detail = "mismatch at (" + std::to_string(n) + "," + std::to_string(k) +
                       "): got " + std::to_string(v.value) + " want " + std::to_string(want);
          return;
        }
        ++checked;
      }
    res.pass = true;
    res.detail = std::to_string(checked) + " pairs";
  });
}

// 2. Exhaustive-search oracle agrees with the formula on the desk catalog.
inline CriterionResult criterion2(const Options& opts) {
  return detail_acc::timed(2, "oracle agreement", [&](CriterionResult& res) {
    const std::vector<std::tuple<std::string, std::string, int>> catalog = {
        {"3", "3", 6},        {"4", "4", 6},         {"4", "3", 7},
        {"5", "4", 7},        {"3,5", "3", 5},       {"<=5", "3", 5},
        {"5,6", "5,6", 7},    {"5,8", "5,6", 8},     {"6", "4", 7},
        {"6", "6", 8}};
    SearchConfig cfg = detail_acc::search_cfg(opts);
    for (auto& [a, b, want] : catalog) {
      CycleSet red_set = CycleSet::parse(a), blue_set = CycleSet::parse(b);
      RamseyVerdict v = generalized_ramsey(red_set, blue_set);
      if (v.value != want) {
        res.detail = "formula disagrees at (" + a + ";" + b + ")";
        return;
      }
      OracleResult o = ramsey_oracle(red_set, blue_set, want, cfg);
      if (o.kind != OracleResult::Kind::Value || o.value != want) {
        res.detail = "oracle disagrees at (" + a + ";" + b + ")";
        return;
      }
    }
    res.pass = true;
    res.detail = std::to_string(catalog.size()) + " pairs";
  });
}

// 3. Critical colourings for red 5-cycles against blue triangles.
inline CriterionResult criterion3(const Options& opts) {
  return detail_acc::timed(3, "critical enumeration (5,3)", [&](CriterionResult& res) {
    SearchConfig cfg = detail_acc::search_cfg(opts);
    EnumerationResult e = enumerate_critical(cs("5"), cs("3"), cfg);
    std::vector<CanonicalKey> want;
    for (bool minus : {false, true})
      want.push_back(canonical_key(build_witness(WitnessSpec::balanced_minus(5, minus))));
    std::sort(want.begin(), want.end());
    std::vector<CanonicalKey> got;
    for (auto& c : e.classes) got.push_back(c.key);
    if (!e.exhaustive) { res.detail = "search not exhaustive"; return; }
    if (got != want || got.size() != 2) {
      res.detail = "got " + std::to_string(got.size()) + " classes";
      return;
    }
    res.pass = true;
    res.detail = "2 classes on 8 vertices, keys match";
  });
}

// 4. Critical colourings for red 6-cycles against blue 4-cycles equal the
// constructed hub-star-and-matching family.
inline CriterionResult criterion4(const Options& opts) {
  return detail_acc::timed(4, "critical enumeration (6,4)", [&](CriterionResult& res) {
    SearchConfig cfg = detail_acc::search_cfg(opts);
    EnumerationResult e = enumerate_critical(cs("6"), cs("4"), cfg);
    std::vector<CanonicalKey> want;
    for (const FamilyMember& m : enumerate_star_matching_families(6)) want.push_back(m.key);
    std::sort(want.begin(), want.end());
    std::vector<CanonicalKey> got;
    for (auto& c : e.classes) got.push_back(c.key);
    if (got != want) {
      res.detail = "searched " + std::to_string(got.size()) + " classes, family has " +
                   std::to_string(want.size());
      return;
    }
    res.pass = true;
    res.detail = std::to_string(got.size()) + " classes, key sets equal";
  });
}

// 5. Every declared witness construction is avoiding with the right order.
inline CriterionResult criterion5(const Options&) {
  return detail_acc::timed(5, "witness suite", [&](CriterionResult& res) {
    int checked = 0;
    for (const CatalogEntry& e : witness_catalog(20, 20)) {
      WitnessReport r = verify_witness(e.spec, cs(e.red_set), cs(e.blue_set));
      if (!r.ok()) {
        res.detail = "failed: " + e.spec.to_string() + " vs (" + e.red_set + ";" +
                     e.blue_set + ")";
        return;
      }
      ++checked;
    }
    res.pass = true;
    res.detail = std::to_string(checked) + " witnesses";
  });
}

// 6. Blue-bipartite oracle matches the closed form, and the extremal
// blue-bipartite colourings match the constructed families.
inline CriterionResult criterion6(const Options& opts) {
  return detail_acc::timed(6, "blue-bipartite oracle", [&](CriterionResult& res) {
    SearchConfig cfg = detail_acc::search_cfg(opts);
    int checked = 0;
    for (int g1 = 3; g1 <= 6; ++g1) {
      std::vector<std::string> red_sets = {std::to_string(g1), ">=" + std::to_string(g1)};
      struct BlueCase { ExtLen even_min; std::vector<std::string> sets; };
      std::vector<BlueCase> blue_cases = {
          {ExtLen(4), {"4", ">=4", "3,4"}},
          {ExtLen(6), {"6", ">=6", "3,6"}},
          {ExtLen(8), {"8", ">=8", "5,8"}},
          {ExtLen::infinity(), {"3", "5", "odd"}}};
      for (auto& rs : red_sets)
        for (auto& bc : blue_cases) {
          int want = blue_bipartite_ramsey(g1, bc.even_min);
          if (want > 10) continue;
          for (auto& bs : bc.sets) {
            OracleResult o = blue_bipartite_oracle(cs(rs), cs(bs), want, cfg);
            if (o.kind != OracleResult::Kind::Value || o.value != want) {
              res.detail = "oracle disagrees at (" + rs + ";" + bs + ")";
              return;
            }
            ++checked;
          }
        }
    }
    for (auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
             {"6", "8"}, {"5", "10"}}) {
      CycleSet red_set = cs(a), blue_set = cs(b);
      int rb = blue_bipartite_ramsey(red_set.min_length(), blue_set.min_even_length());
      EnumerationResult got = enumerate_blue_bipartite_avoiding(red_set, blue_set, rb - 1);
      std::vector<CanonicalKey> want;
      for (const FamilyMember& m : enumerate_max_bipartite_family(red_set, blue_set))
        want.push_back(m.key);
      std::sort(want.begin(), want.end());
      std::vector<CanonicalKey> got_keys;
      for (auto& c : got.classes) got_keys.push_back(c.key);
      if (got_keys != want) {
        res.detail = "family mismatch at (" + a + ";" + b + "): " +
                     std::to_string(got_keys.size()) + " vs " + std::to_string(want.size());
        return;
      }
      checked += 1;
    }
    res.pass = true;
    res.detail = std::to_string(checked) + " oracle/family checks";
  });
}

// 7. Structural property suite: exhaustive at 7 vertices, sampled at 8.
inline CriterionResult criterion7(const Options& opts) {
  return detail_acc::timed(7, "property suite", [&](CriterionResult& res) {
    std::ostringstream detail;
    for (const char* id : {"L3.5a", "L3.5b", "L3.6", "L3.7", "L3.11"}) {
      LemmaReport r = verify_lemma(id, 7, opts.samples);
      if (!r.pass()) { res.detail = std::string(id) + " found a counterexample"; return; }
      detail << id << ":" << r.hypothesis_hits << " ";
    }
    for (const char* id : {"L3.4", "L3.8", "L3.12", "L3.13", "P3.10", "P4.9"}) {
      LemmaReport r = verify_lemma(id, 8, opts.samples);
      if (!r.pass()) { res.detail = std::string(id) + " found a counterexample"; return; }
      detail << id << ":" << r.hypothesis_hits << " ";
    }
    res.pass = true;
    res.detail = "hypothesis hits per property: " + detail.str();
  });
}

// 8. Star-critical upper bound via the critical-class reduction.
inline CriterionResult criterion8(const Options&) {
  return detail_acc::timed(8, "star-critical upper bound", [&](CriterionResult& res) {
    std::uint64_t total = 0;
    for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 3}, {6, 3}, {7, 3}, {6, 5}, {7, 5}}) {
      StarCriticalResult r = star_critical_upper(n, k);
      total += r.extensions_checked;
      if (!r.holds) {
        res.detail = "bound fails at (" + std::to_string(n) + "," + std::to_string(k) + ")";
        return;
      }
    }
    res.pass = true;
    res.detail = std::to_string(total) + " extensions checked";
  });
}

// 9. Conjecture ledger: the oracle never undercuts a conjectured lower bound.
inline CriterionResult criterion9(const Options& opts) {
  return detail_acc::timed(9, "conjecture ledger", [&](CriterionResult& res) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    auto random_set = [&]() -> CycleSet {
      int base = 7 + static_cast<int>(rng() % 6);
      switch (rng() % 4) {
        case 0: return CycleSet::single(base);
        case 1: return CycleSet::of({base, base + 1 + static_cast<int>(rng() % 3)});
        case 2: return CycleSet::at_least(base);
        default:
          return CycleSet::at_least(base, rng() % 2 ? Parity::Odd : Parity::Even);
      }
    };
    SearchConfig cfg;
    cfg.threads = opts.threads;
    cfg.split_depth = opts.threads > 1 ? 4 : 0;
    cfg.node_budget = opts.conjecture_budget;

    int generated = 0, decided = 0, above_cap = 0, undecided = 0;
    while (generated < 50) {
      CycleSet a = random_set(), b = random_set();
      RamseyVerdict v = generalized_ramsey(a, b);
      if (v.status != VerdictStatus::ConjecturedLowerBound) continue;
      if (std::min(v.mins.red_min, v.mins.blue_min) < 7) continue;
      ++generated;
      OracleResult o = ramsey_oracle(a, b, 11, cfg);
      if (o.kind == OracleResult::Kind::Value) {
        ++decided;
        if (o.value < v.value) {
          res.detail = "oracle " + std::to_string(o.value) + " below bound " +
                       std::to_string(v.value) + " for (" + a.to_string() + ";" +
                       b.to_string() + ")";
          return;
        }
      } else if (o.kind == OracleResult::Kind::AboveCap) {
        ++above_cap;  // avoiding colourings up to the cap; never below the bound
      } else {
        ++undecided;  // did not terminate under the cap; skipped per the criterion
      }
    }
    res.pass = true;
    res.detail = "50 pairs: " + std::to_string(decided) + " decided (all >= bound), " +
                 std::to_string(above_cap) + " above cap, " + std::to_string(undecided) +
                 " undecided";
  });
}

// 10. graph6 round-trips and agrees with an independent reference decoder.
inline CriterionResult criterion10(const Options&) {
  return detail_acc::timed(10, "graph6 fidelity", [&](CriterionResult& res) {
    std::mt19937_64 rng(1234567);
    for (int trial = 0; trial < 10'000; ++trial) {
      int n = 3 + static_cast<int>(rng() % 8);
      RedBlueGraph g = detail_acc::random_graph(rng, n);
      if (!(graph6_decode(graph6_encode(g)) == g)) {
        res.detail = "round-trip failure at trial " + std::to_string(trial);
        return;
      }
    }
    for (int trial = 0; trial < 50; ++trial) {
      int n = 3 + static_cast<int>(rng() % 10);
      RedBlueGraph g = detail_acc::random_graph(rng, n);
      if (!detail_acc::reference_graph6_matches(graph6_encode(g), g)) {
        res.detail = "reference decoder mismatch at vector " + std::to_string(trial);
        return;
      }
    }
    res.pass = true;
    res.detail = "10^4 round-trips + 50 reference vectors";
  });
}

inline std::vector<CriterionResult> run_all(const Options& opts = {}) {
  return {criterion1(opts), criterion2(opts), criterion3(opts), criterion4(opts),
          criterion5(opts), criterion6(opts), criterion7(opts), criterion8(opts),
          criterion9(opts), criterion10(opts)};
}

}  // namespace ramsey::acceptance
