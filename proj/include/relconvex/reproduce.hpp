#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace relconvex::reproduce {

/// One reproduced constant, worked example, or acceptance criterion.
struct Entry {
  std::string id;
  /// "constants", "examples" or "acceptance".
  std::string group;
  std::string description;
  nlohmann::json computed;
  nlohmann::json expected;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
  double wall_time_ms = 0.0;
  /// Runtime budget in milliseconds (0 when none applies).
  double time_limit_ms = 0.0;

  nlohmann::json to_json() const;
};

struct Options {
  /// "all", a group name, or a single entry id.
  std::string only = "all";
  std::uint64_t seed = 7;
};

/// Ids of every entry, in run order.
std::vector<std::string> entry_ids();

/// Runs the selected entries. Throws InputError for an unknown selector.
std::vector<Entry> run(const Options& opts);

/// Acceptance criterion k (1 through 10) on its own.
Entry criterion(int k, std::uint64_t seed);

/// Aggregated document: entries, pass/fail counts, seed.
nlohmann::json summarize(const std::vector<Entry>& entries, const Options& opts);

}  // namespace relconvex::reproduce
