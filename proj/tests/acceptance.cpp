// Runs acceptance criteria 1-10 in process and criterion 11 through the CLI,
// printing one PASS/FAIL line each.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "json.hpp"
#include "relconvex/report.hpp"
#include "relconvex/reproduce.hpp"

#ifndef RELCONVEX_CLI_PATH
#error "RELCONVEX_CLI_PATH must name the relconvex executable"
#endif

namespace {

constexpr std::uint64_t kSeed = 7;
constexpr double kEndToEndLimitMs = 120000.0;

struct Capture {
  int status;
  std::string out;
};

Capture capture(const std::string& command) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (const std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  return {status, out};
}

void line(bool pass, int k, const std::string& id, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << k << "  " << id << "  " << detail << std::endl;
}

}  // namespace

int main() {
  int failures = 0;
  char buf[160];

  for (int k = 1; k <= 10; ++k) {
    const auto e = relconvex::reproduce::criterion(k, kSeed);
    const bool in_time = e.time_limit_ms <= 0 || e.wall_time_ms < e.time_limit_ms;
    const bool pass = e.pass && in_time;
    std::snprintf(buf, sizeof buf, "%.1f ms (limit %.0f ms)", e.wall_time_ms, e.time_limit_ms);
    std::string detail = buf;
    detail += "  computed " + e.computed.dump();
    if (!e.detail.empty()) detail += "  " + e.detail;
    if (!in_time) detail += "  over time limit";
    line(pass, k, e.id, detail);
    failures += !pass;
  }

  const std::string command = std::string("\"") + RELCONVEX_CLI_PATH + "\" reproduce all --seed 7 --json";
  const auto t0 = std::chrono::steady_clock::now();
  const auto first = capture(command);
  const double first_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  const auto second = capture(command);

  bool pass = first.status == 0 && second.status == 0 && first_ms < kEndToEndLimitMs;
  std::string detail;
  try {
    const auto a = nlohmann::json::parse(first.out), b = nlohmann::json::parse(second.out);
    const bool same = relconvex::without_wall_time(a).dump() == relconvex::without_wall_time(b).dump();
    const int passed = a.at("value").at("passed").get<int>(), failed = a.at("value").at("failed").get<int>();
    pass = pass && same && failed == 0;
    std::snprintf(buf, sizeof buf, "%d passed, %d failed, %.1f ms (limit %.0f ms), rerun %s", passed, failed,
                  first_ms, kEndToEndLimitMs, same ? "identical" : "differs");
    detail = buf;
  } catch (const std::exception& ex) {
    pass = false;
    detail = std::string("unreadable report: ") + ex.what();
  }
  line(pass, 11, "reproduce-all", detail);
  failures += !pass;

  std::cout << (11 - failures) << "/11 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
