#include <cmath>
#include <numbers>

#include "doctest.h"
#include "relconvex/error.hpp"
#include "relconvex/function.hpp"

using namespace relconvex;

TEST_CASE("built-in values") {
  const double e = std::numbers::e;
  CHECK(functions::xexp()(1.0) == doctest::Approx(e));
  CHECK(functions::xexp()(-1.0) == doctest::Approx(-1.0 / e));
  CHECK(functions::gauss1d()(0.5) == doctest::Approx(std::exp(-0.25)));
  CHECK(functions::log_squared()(e) == doctest::Approx(1.0));
  CHECK(functions::square()(-3.0) == 9.0);
  CHECK(functions::abs_x2_minus_1()(0.5) == doctest::Approx(0.75));
  CHECK(functions::abs_x2_minus_1()(2.0) == doctest::Approx(3.0));
  CHECK(functions::affine(2, 1)(3.0) == 7.0);
  CHECK(functions::positive_part()(-2.0) == 0.0);
  CHECK_FALSE(functions::abs_x2_minus_1().has_derivative());
}

TEST_CASE("built-in derivatives match central differences") {
  for (const auto& name : functions::builtin_names()) {
    const auto f = *functions::builtin(name);
    if (!f.has_derivative()) continue;
    for (double t : {0.3, 0.9, 1.7, 2.5}) {
      const double h = 1e-6;
      const double fd = (f(t + h) - f(t - h)) / (2 * h);
      CHECK(f.derivative(t) == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("registration rejects a wrong derivative") {
  CHECK_THROWS_AS(ScalarFunction("bad", [](double t) { return t * t; }, Interval::real_line(),
                                 [](double t) { return 3 * t; }),
                  InputError);
  CHECK_NOTHROW(ScalarFunction("good", [](double t) { return t * t; }, Interval::real_line(),
                               [](double t) { return 2 * t; }));
}

TEST_CASE("evaluation outside the domain raises DomainError") {
  const auto f = functions::log_squared();
  CHECK_THROWS_AS(f(0.0), DomainError);
  CHECK_THROWS_AS(f(-1.0), DomainError);
  CHECK_THROWS_AS(f.derivative(-1.0), DomainError);
  const ScalarFunction blowup("blowup", [](double t) { return 1.0 / t; }, Interval::real_line());
  CHECK_THROWS_AS(blowup(0.0), DomainError);
}

TEST_CASE("names resolve to built-ins") {
  for (const char* name : {"xexp", "gauss1d", "log2", "square", "absx2m1"}) {
    REQUIRE(functions::builtin(name).has_value());
    CHECK(functions::resolve(name).name() == name);
  }
  CHECK_FALSE(functions::builtin("nope").has_value());
}

TEST_CASE("expression parser") {
  CHECK(functions::parse_expression("t*exp(t)")(1.0) == doctest::Approx(std::numbers::e));
  CHECK(functions::parse_expression("x^2 - 3*x + 2")(1.0) == doctest::Approx(0.0));
  CHECK(functions::parse_expression("-t^2")(2.0) == doctest::Approx(-4.0));
  CHECK(functions::parse_expression("2^3^2")(0.0) == doctest::Approx(512.0));
  CHECK(functions::parse_expression("-2^2")(0.0) == doctest::Approx(-4.0));
  CHECK(functions::parse_expression("abs(t) + sqrt(4) / 2")(-1.0) == doctest::Approx(2.0));
  CHECK(functions::parse_expression("log(e) + cos(pi)")(0.0) == doctest::Approx(0.0));
  CHECK(functions::parse_expression("tanh(0) + sin(0)")(5.0) == doctest::Approx(0.0));
  CHECK(functions::resolve("t^2 + 1")(2.0) == doctest::Approx(5.0));
  CHECK_THROWS_AS(functions::parse_expression("t +"), InputError);
  CHECK_THROWS_AS(functions::parse_expression("foo(t)"), InputError);
  CHECK_THROWS_AS(functions::parse_expression("(t"), InputError);
  CHECK_THROWS_AS(functions::parse_expression("y"), InputError);
  CHECK_THROWS_AS(functions::parse_expression("log(t)")(-1.0), DomainError);
}
