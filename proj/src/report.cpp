#include "relconvex/report.hpp"

#include "relconvex/error.hpp"

namespace relconvex {

nlohmann::json RunReport::to_json() const {
  return {{"subcommand", subcommand}, {"inputs", inputs},         {"verdict", verdict},
          {"value", value},           {"residuals", residuals}, {"tolerances", tolerances},
          {"wall_time_ms", wall_time_ms}};
}

RunReport RunReport::from_json(const nlohmann::json& j) {
  try {
    RunReport r;
    r.subcommand = j.at("subcommand").get<std::string>();
    r.inputs = j.at("inputs");
    r.verdict = j.at("verdict").get<std::string>();
    r.value = j.at("value");
    r.residuals = j.at("residuals");
    r.tolerances = j.at("tolerances");
    r.wall_time_ms = j.at("wall_time_ms").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed run report: ") + e.what());
  }
}

nlohmann::json without_wall_time(nlohmann::json j) {
  if (j.is_object()) {
    j.erase("wall_time_ms");
    for (auto& [key, value] : j.items()) value = without_wall_time(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = without_wall_time(value);
  }
  return j;
}

}  // namespace relconvex
