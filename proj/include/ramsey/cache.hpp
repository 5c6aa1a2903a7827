#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"

namespace ramsey {

// One JSON file per (operation, argument-hash). Entries are self-describing:
// they carry the full key next to the stored output.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  std::optional<std::string> load(const std::string& op, const std::string& key) const {
    std::ifstream in(entry_path(op, key));
    if (!in) return std::nullopt;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || j.value("key", "") != key) return std::nullopt;
    if (!j.contains("output") || !j["output"].is_string()) return std::nullopt;
    return j["output"].get<std::string>();
  }

  void store(const std::string& op, const std::string& key,
             const std::string& output) const {
    nlohmann::ordered_json j;
    j["operation"] = op;
    j["key"] = key;
    j["output"] = output;
    std::ofstream out(entry_path(op, key));
    out << j.dump(2) << "\n";
  }

 private:
  static std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
  }

  std::filesystem::path entry_path(const std::string& op, const std::string& key) const {
    return dir_ / (op + "-" + fnv1a_hex(key) + ".json");
  }

  std::filesystem::path dir_;
};

}  // namespace ramsey
