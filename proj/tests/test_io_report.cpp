#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "relconvex/error.hpp"
#include "relconvex/io.hpp"
#include "relconvex/report.hpp"

using namespace relconvex;
using nlohmann::json;

TEST_CASE("number lists") {
  CHECK(io::parse_number_list("1, -2.5, 3e-1") == Vector{1, -2.5, 0.3});
  CHECK(io::parse_number_list("4") == Vector{4});
  CHECK_THROWS_AS(io::parse_number_list("1,,2"), InputError);
  CHECK_THROWS_AS(io::parse_number_list("1,x"), InputError);
  CHECK_THROWS_AS(io::parse_number_list(""), InputError);
}

TEST_CASE("measure round trip") {
  const WeightedMeasure mu(2, {{0, 1}, {2.5, -1}}, {0.25, 0.75});
  const auto back = io::measure_from_json(io::measure_to_json(mu));
  CHECK(back.dimension() == 2);
  CHECK(back.points() == mu.points());
  CHECK(back.weights() == mu.weights());
  const auto uniform = io::measure_from_json(json::parse(R"({"dimension":1,"points":[[1],[3]]})"));
  CHECK(uniform.weight(0) == 0.5);
  CHECK_THROWS_AS(io::measure_from_json(json::parse(R"({"dimension":2,"points":[[1]]})")), InputError);

  const auto inline_mu = io::load_measure("0,2;1,3");
  CHECK(inline_mu.weights() == Vector{1, 3});
  CHECK(io::load_measure("1,2,3").size() == 3);
}

TEST_CASE("matrix and polynomial json") {
  const auto s = io::symmetric_from_json(json::parse(R"({"n":2,"entries":[[2,1],[1,2]]})"));
  CHECK(s(0, 1) == 1);
  CHECK(io::matrix_to_json(s.entries())["n"] == 2);
  CHECK_THROWS_AS(io::symmetric_from_json(json::parse(R"({"n":3,"entries":[[2,1],[1,2]]})")), InputError);

  const auto p = io::polynomial_from_json(json::parse(R"([[0,0],[-3,0],0,[4,0]])"));
  CHECK(p.degree() == 3);
  const auto back = io::polynomial_from_json(io::polynomial_to_json(p));
  CHECK(back.coefficients() == p.coefficients());
  CHECK(io::load_polynomial("0,-3,0,4").coefficients() == p.coefficients());
}

TEST_CASE("files are read when they exist") {
  const std::string path = "relconvex_io_test_vector.json";
  {
    std::ofstream f(path);
    f << "[1.5, 2.5]";
  }
  CHECK(io::load_vector(path) == Vector{1.5, 2.5});
  CHECK(io::read_json_file(path).has_value());
  std::remove(path.c_str());
  CHECK_FALSE(io::read_json_file(path).has_value());
}

TEST_CASE("intervals") {
  const auto i = io::parse_interval("-inf,2");
  CHECK(i.lo_open);
  CHECK(i.hi == 2);
  CHECK_THROWS_AS(io::parse_interval("3"), InputError);
}

TEST_CASE("run report round trip and determinism") {
  RunReport r;
  r.subcommand = "majorize";
  r.inputs = {{"x", {1, 1, 1}}, {"y", {3, 0, 0}}};
  r.verdict = "true";
  r.residuals = {{"max", 0.0}};
  r.tolerances = {{"tol", 1e-9}};
  r.wall_time_ms = 1.25;
  const json j = r.to_json();
  CHECK(RunReport::from_json(j) == r);
  CHECK(RunReport::from_json(json::parse(j.dump())) == r);

  RunReport later = r;
  later.wall_time_ms = 99.0;
  CHECK(j.dump() != later.to_json().dump());
  CHECK(without_wall_time(j).dump() == without_wall_time(later.to_json()).dump());
  const json nested = {{"a", {{"wall_time_ms", 3}, {"b", 1}}}, {"wall_time_ms", 4}};
  CHECK(without_wall_time(nested) == json{{"a", {{"b", 1}}}});
}
