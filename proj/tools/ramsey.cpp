// Command-line surface for the cycle-ramsey library: closed-form values,
// witness constructions, exhaustive search, enumeration, and the built-in
// acceptance suite. Machine output is JSON with stable field order.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ramsey/acceptance.hpp"
#include "ramsey/cache.hpp"
#include "ramsey/cycle_set.hpp"
#include "ramsey/formulas.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/lemmas.hpp"
#include "ramsey/search.hpp"
#include "ramsey/witnesses.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ramsey;

constexpr const char* kGrammar =
    "cycle-set grammar: comma-separated atoms, optional surrounding braces.\n"
    "  atom := INT | \"<=\" INT | \">=\" INT [\":\" (\"odd\"|\"even\")] | \"odd\" | \"even\" | \"all\"\n"
    "  INT >= 3; \"<=m\" expands to 3..m; \"odd\"/\"even\"/\"all\" start at the least legal length.\n"
    "examples: \"3\", \"{3,5}\", \"<=5\", \">=6\", \">=7:odd\", \"4,>=9:even\", \"all\"\n";

struct GlobalOpts {
  bool json = false;
  std::string cache_dir;
  std::uint64_t budget = 10'000'000'000ull;
  int threads = 1;
  int split_depth = 4;
};

SearchConfig make_config(const GlobalOpts& g) {
  SearchConfig cfg;
  cfg.node_budget = g.budget;
  cfg.threads = g.threads;
  cfg.split_depth = g.threads > 1 ? g.split_depth : 0;
  return cfg;
}

ordered_json ext_json(ExtLen e) {
  if (e.is_finite()) return e.value();
  return "inf";
}

ordered_json mins_json(const MinLengths& m) {
  ordered_json j;
  j["red_min"] = m.red_min;
  j["red_even_min"] = ext_json(m.red_even_min);
  j["blue_min"] = m.blue_min;
  j["blue_even_min"] = ext_json(m.blue_even_min);
  return j;
}

void emit(const ordered_json& j, bool as_json, const std::string& plain) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << plain;
}

// ---- witness spec string parsing -------------------------------------------

int named_int(const std::string& args, const std::string& key) {
  auto pos = args.find(key + "=");
  if (pos == std::string::npos)
    throw std::invalid_argument("witness spec needs " + key + "=");
  pos += key.size() + 1;
  auto end = args.find_first_not_of("0123456789", pos);
  if (end == pos) throw std::invalid_argument("bad integer for " + key);
  return std::stoi(args.substr(pos, end - pos));
}

WitnessSpec parse_witness_spec(const std::string& text) {
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "path4") return WitnessSpec::path4();
  if (head == "bull5") return WitnessSpec::bull5();
  if (head == "pentagon5") return WitnessSpec::pentagon5();
  if (head == "bluebiclique") return WitnessSpec::blue_biclique(named_int(args, "n"), named_int(args, "k"));
  if (head == "redbiclique") return WitnessSpec::red_biclique(named_int(args, "k"));
  if (head == "bluebalanced") return WitnessSpec::blue_balanced(named_int(args, "n"));
  if (head == "hubstar")
    return WitnessSpec::hub_star(named_int(args, "n"), named_int(args, "k"), named_int(args, "s"));
  if (head == "sidestar")
    return WitnessSpec::side_star(named_int(args, "n"), named_int(args, "k"), named_int(args, "s"));
  if (head == "cliquepair")
    return WitnessSpec::clique_pair(named_int(args, "n"), named_int(args, "cross"));
  if (head == "balancedminus")
    return WitnessSpec::balanced_minus(named_int(args, "n"), named_int(args, "minus") != 0);
  if (head == "starmatching") {
    std::vector<std::pair<int, int>> matching;
    auto mpos = args.find("m=");
    if (mpos != std::string::npos) {
      std::string m = args.substr(mpos + 2);
      std::istringstream in(m);
      std::string pair_str;
      while (std::getline(in, pair_str, ';')) {
        auto dash = pair_str.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("matching pair needs a-b");
        matching.emplace_back(std::stoi(pair_str.substr(0, dash)),
                              std::stoi(pair_str.substr(dash + 1)));
      }
    }
    return WitnessSpec::star_matching(named_int(args, "i"), named_int(args, "n"), matching);
  }
  throw std::invalid_argument("unknown witness kind: " + head +
                              " (path4, bull5, pentagon5, bluebiclique, redbiclique, "
                              "bluebalanced, hubstar, sidestar, cliquepair, balancedminus, "
                              "starmatching)");
}

// ---- command bodies ---------------------------------------------------------

int cmd_compute(const GlobalOpts& g, const std::string& g1, const std::string& g2) {
  CycleSet a = CycleSet::parse(g1), b = CycleSet::parse(g2);
  RamseyVerdict v = generalized_ramsey(a, b);
  ordered_json j;
  j["command"] = "compute";
  j["g1"] = a.to_string();
  j["g2"] = b.to_string();
  j["gammas"] = mins_json(v.mins);
  j["bipartite_bound"] = bipartite_bound(v.mins);
  j["in_plus_one_class"] = in_plus_one_class(a, b);
  j["in_red_reducible_class"] = in_red_reducible_class(v.mins);
  j["in_blue_reducible_class"] = in_blue_reducible_class(v.mins);
  j["value"] = v.value;
  j["status"] = to_string(v.status);
  j["basis"] = v.basis;

  std::ostringstream plain;
  plain << "pair          (" << a.to_string() << " ; " << b.to_string() << ")\n"
        << "min lengths   red " << v.mins.red_min << " (even " << v.mins.red_even_min.to_string()
        << "), blue " << v.mins.blue_min << " (even " << v.mins.blue_even_min.to_string() << ")\n"
        << "bipartite max " << bipartite_bound(v.mins) << "\n"
        << "classes       plus-one " << (in_plus_one_class(a, b) ? "yes" : "no")
        << ", red-reducible " << (in_red_reducible_class(v.mins) ? "yes" : "no")
        << ", blue-reducible " << (in_blue_reducible_class(v.mins) ? "yes" : "no") << "\n"
        << "R             " << v.value << " [" << to_string(v.status) << ", " << v.basis << "]\n";
  emit(j, g.json, plain.str());
  return 0;
}

int cmd_witness(const GlobalOpts& g, const std::string& spec_str, const std::string& out,
                const std::string& g1, const std::string& g2) {
  WitnessSpec spec = parse_witness_spec(spec_str);
  RedBlueGraph graph = build_witness(spec);
  std::string g6 = graph6_encode(graph);

  ordered_json j;
  j["command"] = "witness";
  j["spec"] = spec.to_string();
  j["n"] = graph.order();
  j["graph6"] = g6;
  j["colour_convention"] = "file stores the red subgraph";
  std::ostringstream plain;
  plain << g6 << "\n";
  if (!g1.empty() && !g2.empty()) {
    WitnessReport rep = verify_witness(spec, CycleSet::parse(g1), CycleSet::parse(g2));
    j["avoiding"] = rep.avoiding;
    j["expected_vertices"] = rep.expected_vertex_count;
    plain << "avoiding: " << (rep.avoiding ? "yes" : "no") << " on " << rep.vertex_count
          << " vertices (expected " << rep.expected_vertex_count << ")\n";
  }
  if (!out.empty()) {
    std::ofstream g6f(out + ".g6");
    g6f << g6 << "\n";
    std::ofstream mf(out + ".json");
    mf << j.dump(2) << "\n";
  }
  emit(j, g.json, plain.str());
  return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& file, const std::string& g1,
               const std::string& g2) {
  CycleSet a = CycleSet::parse(g1), b = CycleSet::parse(g2);
  std::istream* in = &std::cin;
  std::ifstream f;
  if (file != "-") {
    f.open(file);
    if (!f) throw std::runtime_error("cannot open " + file);
    in = &f;
  }
  ordered_json j;
  j["command"] = "verify";
  j["g1"] = a.to_string();
  j["g2"] = b.to_string();
  j["graphs"] = ordered_json::array();
  std::ostringstream plain;
  bool all = true;
  std::string line;
  int lineno = 0;
  while (std::getline(*in, line)) {
    ++lineno;
    if (line.empty()) continue;
    RedBlueGraph graph = graph6_decode(line);
    auto rc = cycle_from_set(graph, Colour::Red, a);
    auto bc = cycle_from_set(graph, Colour::Blue, b);
    bool avoiding = !rc && !bc;
    all &= avoiding;
    ordered_json entry;
    entry["line"] = lineno;
    entry["n"] = graph.order();
    entry["avoiding"] = avoiding;
    entry["red_cycle"] = rc ? ordered_json(*rc) : ordered_json(nullptr);
    entry["blue_cycle"] = bc ? ordered_json(*bc) : ordered_json(nullptr);
    j["graphs"].push_back(entry);
    plain << "line " << lineno << ": n=" << graph.order()
          << (avoiding ? " avoiding" : " NOT avoiding");
    if (rc) plain << " (red cycle " << *rc << ")";
    if (bc) plain << " (blue cycle " << *bc << ")";
    plain << "\n";
  }
  j["all_avoiding"] = all;
  emit(j, g.json, plain.str());
  return 0;
}

int cmd_search(const GlobalOpts& g, const std::string& g1, const std::string& g2, int n,
               std::string* out_text) {
  CycleSet a = CycleSet::parse(g1), b = CycleSet::parse(g2);
  ExistsResult r = exists_avoiding(a, b, n, make_config(g));
  ordered_json j;
  j["command"] = "search";
  j["g1"] = a.to_string();
  j["g2"] = b.to_string();
  j["n"] = n;
  j["explored_nodes"] = r.explored_nodes;
  std::ostringstream plain;
  int code = 0;
  switch (r.status) {
    case SearchStatus::Found:
      j["result"] = "found";
      j["witness_graph6"] = graph6_encode(*r.witness);
      plain << "found: " << graph6_encode(*r.witness) << "\n";
      break;
    case SearchStatus::None:
      j["result"] = "none";
      plain << "none: every colouring on " << n << " vertices hits a forbidden cycle\n";
      break;
    case SearchStatus::Undecided:
      j["result"] = "undecided";
      plain << "undecided within node budget\n";
      code = 2;
      break;
  }
  std::ostringstream full;
  full << (g.json ? j.dump(2) + "\n" : plain.str());
  *out_text = full.str();
  return code;
}

int cmd_oracle(const GlobalOpts& g, const std::string& g1, const std::string& g2, int cap,
               std::string* out_text) {
  CycleSet a = CycleSet::parse(g1), b = CycleSet::parse(g2);
  OracleResult r = ramsey_oracle(a, b, cap, make_config(g));
  ordered_json j;
  j["command"] = "oracle";
  j["g1"] = a.to_string();
  j["g2"] = b.to_string();
  j["cap"] = cap;
  j["explored_nodes"] = r.explored_nodes;
  std::ostringstream plain;
  int code = 0;
  switch (r.kind) {
    case OracleResult::Kind::Value:
      j["result"] = "value";
      j["value"] = r.value;
      plain << r.value << "\n";
      break;
    case OracleResult::Kind::AboveCap:
      j["result"] = "above_cap";
      plain << "above cap " << cap << "\n";
      break;
    case OracleResult::Kind::Undecided:
      j["result"] = "undecided";
      j["undecided_at"] = r.undecided_at;
      plain << "undecided at n=" << r.undecided_at << " within node budget\n";
      code = 2;
      break;
  }
  *out_text = g.json ? j.dump(2) + "\n" : plain.str();
  return code;
}

int cmd_enumerate(const GlobalOpts& g, const std::string& g1, const std::string& g2, int n,
                  const std::string& out, std::string* out_text) {
  CycleSet a = CycleSet::parse(g1), b = CycleSet::parse(g2);
  EnumerationResult r = enumerate_avoiding(a, b, n, make_config(g));
  ordered_json j;
  j["command"] = "enumerate";
  j["pair"] = ordered_json{{"g1", a.to_string()}, {"g2", b.to_string()}};
  j["n"] = n;
  j["exhaustive"] = r.exhaustive;
  j["class_count"] = r.classes.size();
  j["explored_nodes"] = r.explored_nodes;
  j["colour_convention"] = "file stores the red subgraph";
  j["graphs"] = ordered_json::array();
  std::ostringstream g6_lines;
  for (const auto& c : r.classes) {
    j["graphs"].push_back(c.key.bytes);
    g6_lines << c.key.bytes << "\n";
  }
  if (!out.empty()) {
    std::ofstream g6f(out + ".g6");
    g6f << g6_lines.str();
    std::ofstream mf(out + ".json");
    mf << j.dump(2) << "\n";
  }
  std::ostringstream plain;
  plain << g6_lines.str() << "# " << r.classes.size() << " classes, exhaustive="
        << (r.exhaustive ? "yes" : "no") << ", nodes=" << r.explored_nodes << "\n";
  *out_text = g.json ? j.dump(2) + "\n" : plain.str();
  return r.exhaustive ? 0 : 2;
}

int cmd_check_critical(const GlobalOpts& g, const std::string& g1, const std::string& g2,
                       std::string* out_text) {
  CycleSet a = CycleSet::parse(g1), b = CycleSet::parse(g2);
  CharacterizationReport r = check_critical_characterization(a, b, make_config(g));
  ordered_json j;
  j["command"] = "check-critical";
  j["g1"] = a.to_string();
  j["g2"] = b.to_string();
  j["R"] = r.ramsey_value;
  j["classes"] = r.search_keys.size();
  j["family_classes"] = r.family_keys.size();
  j["match"] = r.match;
  j["missing_from_search"] = ordered_json::array();
  for (const auto& k : r.missing_from_search) j["missing_from_search"].push_back(k.bytes);
  j["missing_from_family"] = ordered_json::array();
  for (const auto& k : r.missing_from_family) j["missing_from_family"].push_back(k.bytes);
  std::ostringstream plain;
  plain << r.search_keys.size() << " classes, characterization: "
        << (r.match ? "MATCH" : "MISMATCH") << "\n";
  *out_text = g.json ? j.dump(2) + "\n" : plain.str();
  return 0;
}

int cmd_star_critical(const GlobalOpts& g, int n, int k, std::string* out_text) {
  StarCriticalResult r = star_critical_upper(n, k);
  ordered_json j;
  j["command"] = "star-critical";
  j["n"] = n;
  j["k"] = k;
  j["upper_bound_holds"] = r.holds;
  j["extensions_checked"] = r.extensions_checked;
  std::ostringstream plain;
  plain << "upper bound " << (r.holds ? "holds" : "FAILS") << " (" << r.extensions_checked
        << " extensions)\n";
  *out_text = g.json ? j.dump(2) + "\n" : plain.str();
  return 0;
}

int cmd_lemma_suite(const GlobalOpts& g, const std::string& ids_csv, int n,
                    std::uint64_t samples, std::string* out_text) {
  std::vector<std::string> ids;
  if (ids_csv == "all") {
    ids = lemma_catalog();
  } else {
    std::istringstream in(ids_csv);
    std::string id;
    while (std::getline(in, id, ',')) ids.push_back(id);
  }
  ordered_json j;
  j["command"] = "lemma-suite";
  j["n"] = n;
  j["reports"] = ordered_json::array();
  std::ostringstream plain;
  bool all_pass = true;
  for (const std::string& id : ids) {
    LemmaReport r = verify_lemma(id, n, samples, 20240801, make_config(g));
    all_pass &= r.pass();
    ordered_json rep;
    rep["lemma"] = r.id;
    rep["checked"] = r.checked;
    rep["hypothesis_hits"] = r.hypothesis_hits;
    rep["exhaustive"] = r.exhaustive;
    rep["counterexamples"] = ordered_json::array();
    for (const auto& c : r.counterexamples) rep["counterexamples"].push_back(c);
    j["reports"].push_back(rep);
    plain << r.id << ": " << (r.pass() ? "ok" : "COUNTEREXAMPLE") << " (" << r.checked
          << " colourings, " << r.hypothesis_hits << " hypothesis hits, "
          << (r.exhaustive ? "exhaustive" : "sampled") << ")\n";
  }
  j["all_pass"] = all_pass;
  *out_text = g.json ? j.dump(2) + "\n" : plain.str();
  return all_pass ? 0 : 1;
}

int cmd_selftest(const GlobalOpts& g) {
  acceptance::Options opts;
  opts.threads = g.threads;
  auto results = acceptance::run_all(opts);
  ordered_json j;
  j["command"] = "selftest";
  j["criteria"] = ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    all &= r.pass;
    ordered_json c;
    c["id"] = r.id;
    c["name"] = r.name;
    c["pass"] = r.pass;
    c["seconds"] = r.seconds;
    c["detail"] = r.detail;
    j["criteria"].push_back(c);
    if (!g.json) {
      char line[512];
      std::snprintf(line, sizeof(line), "criterion %d (%s): %s [%.2fs] %s\n", r.id,
                    r.name.c_str(), r.pass ? "PASS" : "FAIL", r.seconds,
                    r.detail.c_str());
      std::cout << line;
    }
  }
  j["all_pass"] = all;
  if (g.json) std::cout << j.dump(2) << "\n";
  return all ? 0 : 1;
}

std::string cache_key(std::initializer_list<std::string> parts) {
  std::string key;
  for (const auto& p : parts) {
    key += p;
    key += '\x1f';
  }
  return key;
}

// Runs a cachable command: on hit prints the stored bytes, on miss runs and
// stores the exact output so replays are byte-identical.
int run_cached(const GlobalOpts& g, const std::string& op, const std::string& key,
               const std::function<int(std::string*)>& body) {
  std::optional<ResultCache> cache;
  if (!g.cache_dir.empty()) cache.emplace(g.cache_dir);
  if (cache) {
    if (auto hit = cache->load(op, key)) {
      std::cout << *hit;
      return 0;
    }
  }
  std::string text;
  int code = body(&text);
  std::cout << text;
  if (cache && code == 0) cache->store(op, key, text);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cycle-ramsey: generalised Ramsey numbers for sets of cycles"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_flag("--json", g.json, "machine-readable JSON output");
  app.add_option("--cache", g.cache_dir, "results cache directory");
  app.add_option("--budget", g.budget, "search node budget per subtree");
  app.add_option("--threads", g.threads, "worker threads for the search");
  app.add_option("--split-depth", g.split_depth, "edge-prefix depth for work splitting");

  std::string g1, g2, spec_str, out, file = "-", ids = "all";
  int n = 0, k = 0, cap = 13;
  std::uint64_t samples = 1'000'000;

  auto* c_compute = app.add_subcommand("compute", "closed-form Ramsey value for a pair");
  c_compute->add_option("--g1", g1)->required();
  c_compute->add_option("--g2", g2)->required();

  auto* c_witness = app.add_subcommand("witness", "build a named avoiding colouring");
  c_witness->add_option("--spec", spec_str)->required();
  c_witness->add_option("--out", out, "write <out>.g6 and <out>.json");
  c_witness->add_option("--g1", g1, "verify against this red set");
  c_witness->add_option("--g2", g2, "verify against this blue set");

  auto* c_verify = app.add_subcommand("verify", "check graph6 colourings for avoidance");
  c_verify->add_option("--in", file, "graph6 file, or - for stdin");
  c_verify->add_option("--g1", g1)->required();
  c_verify->add_option("--g2", g2)->required();

  auto* c_search = app.add_subcommand("search", "find an avoiding colouring on n vertices");
  c_search->add_option("--g1", g1)->required();
  c_search->add_option("--g2", g2)->required();
  c_search->add_option("--n", n)->required();

  auto* c_oracle = app.add_subcommand("oracle", "exhaustive Ramsey value up to a cap");
  c_oracle->add_option("--g1", g1)->required();
  c_oracle->add_option("--g2", g2)->required();
  c_oracle->add_option("--cap", cap)->required();

  auto* c_enum = app.add_subcommand("enumerate", "avoiding colourings up to isomorphism");
  c_enum->add_option("--g1", g1)->required();
  c_enum->add_option("--g2", g2)->required();
  c_enum->add_option("--n", n)->required();
  c_enum->add_option("--out", out, "write <out>.g6 and <out>.json");

  auto* c_check = app.add_subcommand("check-critical", "search vs constructed critical family");
  c_check->add_option("--g1", g1)->required();
  c_check->add_option("--g2", g2)->required();

  auto* c_star = app.add_subcommand("star-critical", "star-critical upper bound check");
  c_star->add_option("--n", n)->required();
  c_star->add_option("--k", k)->required();

  auto* c_lemma = app.add_subcommand("lemma-suite", "structural property suite");
  c_lemma->add_option("--ids", ids, "comma-separated ids, or 'all'");
  c_lemma->add_option("--n", n)->required();
  c_lemma->add_option("--samples", samples);

  auto* c_self = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    if (code != 0) std::cerr << "\n" << kGrammar;
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_compute->parsed()) return cmd_compute(g, g1, g2);
    if (c_witness->parsed()) return cmd_witness(g, spec_str, out, g1, g2);
    if (c_verify->parsed()) return cmd_verify(g, file, g1, g2);
    if (c_search->parsed())
      return run_cached(g, "search",
                        cache_key({"search", g1, g2, std::to_string(n),
                                   std::to_string(g.budget), g.json ? "j" : "t"}),
                        [&](std::string* t) { return cmd_search(g, g1, g2, n, t); });
    if (c_oracle->parsed())
      return run_cached(g, "oracle",
                        cache_key({"oracle", g1, g2, std::to_string(cap),
                                   std::to_string(g.budget), g.json ? "j" : "t"}),
                        [&](std::string* t) { return cmd_oracle(g, g1, g2, cap, t); });
    if (c_enum->parsed())
      return run_cached(g, "enumerate",
                        cache_key({"enumerate", g1, g2, std::to_string(n),
                                   std::to_string(g.budget), g.json ? "j" : "t", out}),
                        [&](std::string* t) { return cmd_enumerate(g, g1, g2, n, out, t); });
    if (c_check->parsed())
      return run_cached(g, "check-critical",
                        cache_key({"check-critical", g1, g2, std::to_string(g.budget),
                                   g.json ? "j" : "t"}),
                        [&](std::string* t) { return cmd_check_critical(g, g1, g2, t); });
    if (c_star->parsed())
      return run_cached(g, "star-critical",
                        cache_key({"star-critical", std::to_string(n), std::to_string(k),
                                   g.json ? "j" : "t"}),
                        [&](std::string* t) { return cmd_star_critical(g, n, k, t); });
    if (c_lemma->parsed())
      return run_cached(g, "lemma-suite",
                        cache_key({"lemma-suite", ids, std::to_string(n),
                                   std::to_string(samples), g.json ? "j" : "t"}),
                        [&](std::string* t) { return cmd_lemma_suite(g, ids, n, samples, t); });
    if (c_self->parsed()) return cmd_selftest(g);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kGrammar;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
