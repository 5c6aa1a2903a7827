#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(RAMSEY_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

// Minimal structural validation against the shipped schema: required fields
// exist and primitive types match. Covers the subset of JSON Schema the
// published file uses.
bool matches_schema(const nlohmann::json& schema, const nlohmann::json& value) {
  if (schema.contains("type")) {
    std::string t = schema["type"];
    if (t == "object" && !value.is_object()) return false;
    if (t == "array" && !value.is_array()) return false;
    if (t == "string" && !value.is_string()) return false;
    if (t == "integer" && !value.is_number_integer()) return false;
    if (t == "number" && !value.is_number()) return false;
    if (t == "boolean" && !value.is_boolean()) return false;
  }
  if (schema.contains("enum")) {
    bool any = false;
    for (const auto& e : schema["enum"]) any |= e == value;
    if (!any) return false;
  }
  if (schema.contains("required"))
    for (const auto& key : schema["required"])
      if (!value.contains(key.get<std::string>())) return false;
  if (schema.contains("properties") && value.is_object())
    for (auto& [key, sub] : schema["properties"].items())
      if (value.contains(key) && !matches_schema(sub, value[key])) return false;
  if (schema.contains("items") && value.is_array())
    for (const auto& item : value)
      if (!matches_schema(schema["items"], item)) return false;
  if (schema.contains("oneOf")) {
    int hits = 0;
    for (const auto& sub : schema["oneOf"]) hits += matches_schema(sub, value) ? 1 : 0;
    if (hits != 1) return false;
  }
  return true;
}

nlohmann::json load_schema() {
  std::filesystem::path here = std::filesystem::path(RAMSEY_CLI_PATH);
  // tools binary lives in <build>/tools; the schema sits in the source tree.
  std::filesystem::path schema =
      here.parent_path().parent_path().parent_path() / "schemas" / "cli_output.schema.json";
  std::ifstream in(schema);
  EXPECT_TRUE(in.good()) << schema;
  return nlohmann::json::parse(in);
}

}  // namespace

TEST(Cli, ComputeJsonStableAndSchemaValid) {
  RunResult a = run_cli("compute --g1 \"{3}\" --g2 \"{3}\" --json");
  RunResult b = run_cli("compute --g1 \"{3}\" --g2 \"{3}\" --json");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.output, b.output);
  nlohmann::json j = nlohmann::json::parse(a.output);
  EXPECT_EQ(j["value"], 6);
  EXPECT_EQ(j["status"], "Exact");
  EXPECT_EQ(j["basis"], "Prop4.2");
  EXPECT_TRUE(matches_schema(load_schema(), j));
}

TEST(Cli, OracleValueAndExitCodes) {
  RunResult r = run_cli("oracle --g1 \"{4}\" --g2 \"{4}\" --cap 8");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "6\n");

  RunResult undecided = run_cli("oracle --g1 \"6\" --g2 \"6\" --cap 8 --budget 10 --json");
  EXPECT_EQ(undecided.exit_code, 2);
  nlohmann::json j = nlohmann::json::parse(undecided.output);
  EXPECT_EQ(j["result"], "undecided");
  EXPECT_TRUE(matches_schema(load_schema(), j));
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run_cli("oracle --g1 \"4\"").exit_code, 1);
  EXPECT_EQ(run_cli("compute --g1 \"2\" --g2 \"3\"").exit_code, 1);
  EXPECT_EQ(run_cli("nonsense").exit_code, 1);
}

TEST(Cli, VerifyReadsFileAndStdin) {
  RunResult witness = run_cli("witness --spec pentagon5");
  EXPECT_EQ(witness.exit_code, 0);
  std::string g6 = witness.output.substr(0, witness.output.find('\n'));

  std::filesystem::path file = std::filesystem::temp_directory_path() / "ramsey_verify.g6";
  {
    std::ofstream out(file);
    out << g6 << "\n";
  }
  RunResult verify = run_cli("verify --in " + file.string() + " --g1 \"3\" --g2 \"3\" --json");
  EXPECT_EQ(verify.exit_code, 0);
  nlohmann::json j = nlohmann::json::parse(verify.output);
  EXPECT_TRUE(j["all_avoiding"].get<bool>());
  EXPECT_TRUE(matches_schema(load_schema(), j));

  RunResult piped =
      run_cli("verify --in - --g1 \"3\" --g2 \"3\" --json < " + file.string());
  EXPECT_EQ(piped.exit_code, 0);
  EXPECT_EQ(piped.output, verify.output);
  std::filesystem::remove(file);
}

TEST(Cli, EnumerateWritesCollection) {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "ramsey_cli_test";
  std::filesystem::create_directories(dir);
  std::string base = (dir / "out").string();
  RunResult r = run_cli("enumerate --g1 \"3\" --g2 \"3\" --n 5 --out " + base + " --json");
  EXPECT_EQ(r.exit_code, 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  EXPECT_EQ(j["class_count"], 1);
  EXPECT_TRUE(j["exhaustive"].get<bool>());
  EXPECT_TRUE(matches_schema(load_schema(), j));
  std::ifstream g6(base + ".g6");
  std::string line;
  EXPECT_TRUE(std::getline(g6, line));
  std::ifstream manifest(base + ".json");
  nlohmann::json m = nlohmann::json::parse(manifest);
  EXPECT_EQ(m["colour_convention"], "file stores the red subgraph");
  std::filesystem::remove_all(dir);
}

TEST(Cli, CacheReplaysByteIdentical) {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "ramsey_cli_cache";
  std::filesystem::remove_all(dir);
  std::string flags = " --cache " + dir.string() + " --json";
  RunResult first = run_cli("oracle --g1 \"4\" --g2 \"3\" --cap 8" + flags);
  EXPECT_EQ(first.exit_code, 0);
  bool entry_written = false;
  for (auto& e : std::filesystem::directory_iterator(dir))
    entry_written |= e.path().extension() == ".json";
  EXPECT_TRUE(entry_written);
  RunResult second = run_cli("oracle --g1 \"4\" --g2 \"3\" --cap 8" + flags);
  EXPECT_EQ(second.exit_code, 0);
  EXPECT_EQ(first.output, second.output);
  std::filesystem::remove_all(dir);
}

TEST(Cli, StarCriticalAndLemmaSuite) {
  RunResult star = run_cli("star-critical --n 5 --k 3 --json");
  EXPECT_EQ(star.exit_code, 0);
  nlohmann::json j = nlohmann::json::parse(star.output);
  EXPECT_TRUE(j["upper_bound_holds"].get<bool>());
  EXPECT_TRUE(matches_schema(load_schema(), j));

  RunResult lemma = run_cli("lemma-suite --ids L3.7 --n 5 --json");
  EXPECT_EQ(lemma.exit_code, 0);
  nlohmann::json l = nlohmann::json::parse(lemma.output);
  EXPECT_TRUE(l["all_pass"].get<bool>());
  EXPECT_TRUE(matches_schema(load_schema(), l));
}

TEST(Cli, CheckCriticalReportsMatch) {
  RunResult r = run_cli("check-critical --g1 \"5\" --g2 \"3\"");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("2 classes, characterization: MATCH"), std::string::npos);
}
