#pragma once

#include <string>

#include "json.hpp"

namespace relconvex {

/// Machine-readable record of one CLI invocation.
///
/// Serializes with sorted keys, so equal reports give byte-identical JSON
/// apart from `wall_time_ms`.
struct RunReport {
  std::string subcommand;
  nlohmann::json inputs = nlohmann::json::object();
  /// "true"/"false", "feasible"/"infeasible", or empty when a value is reported.
  std::string verdict;
  nlohmann::json value;
  nlohmann::json residuals = nlohmann::json::object();
  nlohmann::json tolerances = nlohmann::json::object();
  double wall_time_ms = 0.0;

  nlohmann::json to_json() const;
  static RunReport from_json(const nlohmann::json& j);

  bool operator==(const RunReport&) const = default;
};

/// Copy of a report JSON with every "wall_time_ms" key removed, recursively.
nlohmann::json without_wall_time(nlohmann::json j);

}  // namespace relconvex
