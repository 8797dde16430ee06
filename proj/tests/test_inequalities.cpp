#include <cmath>
#include <random>

#include "doctest.h"
#include "relconvex/error.hpp"
#include "relconvex/inequalities.hpp"
#include "relconvex/majorization.hpp"

using namespace relconvex;

TEST_CASE("sextic witness examples") {
  const auto w = popoviciu_witness(3, 2, 1);
  CHECK(w.x == std::array<double, 6>{2.5, 2.5, 2, 2, 1.5, 1.5});
  CHECK(w.y == std::array<double, 6>{3, 2, 2, 2, 2, 1});
  CHECK(w.which == SexticWitness::Case::mean_above_middle);

  const auto c = popoviciu_witness(1.25, 1.25, 1.25);
  for (int i = 0; i < 6; ++i) {
    CHECK(c.x[i] == 1.25);
    CHECK(c.y[i] == 1.25);
  }

  const auto s = popoviciu_witness(6, 1, -1);
  CHECK(s.which == SexticWitness::Case::mean_above_middle);
  CHECK(s.y == std::array<double, 6>{6, 2, 2, 2, 1, -1});
  CHECK(s.x == std::array<double, 6>{3.5, 3.5, 2.5, 2.5, 0, 0});
  CHECK(is_majorized(s.x, s.y));

  // Mean 2 sits between the middle value 3 and the smallest.
  const auto t = popoviciu_witness(4, 3, -1);
  CHECK(t.which == SexticWitness::Case::mean_below_middle);
  CHECK(t.y == std::array<double, 6>{4, 3, 2, 2, 2, -1});
  CHECK(t.x == std::array<double, 6>{3.5, 3.5, 1.5, 1.5, 1, 1});
  CHECK(is_majorized(t.x, t.y));
}

TEST_CASE("witness families on random triplets") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    const double a = u(rng), b = u(rng), c = u(rng);
    const auto w = popoviciu_witness(a, b, c);
    CHECK(is_majorized(w.x, w.y));
    double sx = 0, sy = 0;
    for (int i = 0; i < 6; ++i) sx += w.x[i], sy += w.y[i];
    CHECK(std::abs(sx - 2 * (a + b + c)) <= 1e-12 * (1 + std::abs(a) + std::abs(b) + std::abs(c)));
    CHECK(std::abs(sy - sx) <= 1e-12 * (1 + std::abs(a) + std::abs(b) + std::abs(c)));
    CHECK(popoviciu_verify(functions::square(), a, b, c).holds);
  }
}

TEST_CASE("popoviciu examples") {
  const auto sq = popoviciu_verify(functions::square(), 0, 1, 2);
  CHECK(sq.lhs == doctest::Approx(8.0 / 3));
  CHECK(sq.rhs == doctest::Approx(7.0 / 3));
  CHECK(sq.holds);
  const auto eq = popoviciu_verify(functions::xexp(), 0.4, 0.4, 0.4);
  CHECK(eq.lhs == doctest::Approx(2 * 0.4 * std::exp(0.4)));
  CHECK(std::abs(eq.slack) <= 1e-12);
  CHECK(popoviciu_verify(functions::log_squared(), 0.5, 1, 2).holds);
  CHECK_THROWS_AS(popoviciu_verify(functions::log_squared(), -1, 1, 2), DomainError);
}

TEST_CASE("weighted xexp jensen") {
  const auto single = xexp_weighted_jensen_verify(Vector{1.0}, Vector{0.3});
  CHECK(std::abs(single.slack) <= 1e-15);
  const auto pair = xexp_weighted_jensen_verify(Vector{0.5, 0.5}, Vector{-4, 2});
  CHECK(pair.holds);
  CHECK(pair.rhs == doctest::Approx(-std::exp(-1.0)));
  // Two-point average of x e^x at -4 and 2.
  CHECK(pair.lhs == doctest::Approx((-4 * std::exp(-4.0) + 2 * std::exp(2.0)) / 2));
  const auto zero = xexp_weighted_jensen_verify(Vector{0.5, 0.5}, Vector{0, 0});
  CHECK(zero.lhs == 0);
  CHECK(zero.rhs == 0);
  CHECK_THROWS_WITH_AS(xexp_weighted_jensen_verify(Vector{0.5, 0.5}, Vector{-4, -2}), doctest::Contains("outside certified region"),
                       HypothesisError);
  CHECK_THROWS_AS(xexp_weighted_jensen_verify(Vector{0.5, 0.6}, Vector{0, 0}), InputError);
  CHECK_THROWS_AS(xexp_weighted_jensen_verify(Vector{1.5, -0.5}, Vector{0, 0}), InputError);
}

TEST_CASE("borwein girgensohn") {
  CHECK(borwein_girgensohn_constant(1) == 2.0);
  CHECK(borwein_girgensohn_constant(2) == 1.0);
  CHECK(borwein_girgensohn_constant(10) == doctest::Approx(std::exp(1.0) * 0.9 / 10));
  const auto zeros = borwein_girgensohn_verify(Vector{0, 0, 0});
  CHECK(zeros.lhs == 0);
  CHECK(zeros.holds);
  const auto pm = borwein_girgensohn_verify(Vector{1, -1});
  CHECK(pm.lhs == doctest::Approx(2.3504).epsilon(1e-4));
  CHECK(pm.rhs == doctest::Approx(2.0));
  for (int i = 0; i <= 1000; ++i) {
    const double t = i / 100.0;
    const auto r = borwein_girgensohn_verify(Vector{t});
    CHECK(r.holds);
    CHECK(r.rhs == doctest::Approx(2 * t * t));
  }
  CHECK_THROWS_WITH_AS(borwein_girgensohn_verify(Vector{1, -2}), doctest::Contains("hypothesis violated"), HypothesisError);
}

TEST_CASE("log squared triplets") {
  const std::array<double, 3> one{1, 1, 1};
  CHECK(elementary_symmetric({2, 1, 0.5}) == std::array<double, 3>{3.5, 3.5, 1});
  const auto same = bnl_triplet_verify({2, 3, 0.5}, {2, 3, 0.5});
  CHECK(std::abs(same.slack) <= 1e-15);
  const auto a = bnl_triplet_verify(one, {2, 1, 0.5});
  CHECK(a.holds);
  CHECK(a.lhs == 0);
  CHECK(a.rhs == doctest::Approx(2 * std::log(2.0) * std::log(2.0)));
  const auto b = bnl_triplet_verify(one, {4, 1, 0.25});
  CHECK(b.rhs == doctest::Approx(2 * std::log(4.0) * std::log(4.0)));
  CHECK(b.holds);
  CHECK_THROWS_AS(bnl_triplet_verify({2, 1, 0.5}, one), HypothesisError);
  CHECK_THROWS_AS(bnl_triplet_verify(one, {2, 1, 1}), HypothesisError);
  CHECK_THROWS_AS(bnl_triplet_verify({-1, -1, 1}, one), InputError);
}

TEST_CASE("probabilistic jensen") {
  const auto f = functions::xexp();
  const auto dirac = probabilistic_jensen_verify(WeightedMeasure::dirac({1.5}), f);
  CHECK(dirac.f_of_mean == doctest::Approx(dirac.mean_of_f));

  const auto two = probabilistic_jensen_verify(WeightedMeasure::uniform_on_line({-4, 2}), f);
  CHECK(two.mean == doctest::Approx(-1));
  CHECK(two.f_of_mean == doctest::Approx(-std::exp(-1.0)));
  CHECK(two.mean_of_f == doctest::Approx((-4 * std::exp(-4.0) + 2 * std::exp(2.0)) / 2));
  CHECK(two.holds);

  const Vector samples{-10, 8};
  const auto trunc = probabilistic_jensen_verify(samples, f, 5.0);
  CHECK(trunc.support.point(0)[0] == -5);
  CHECK(trunc.support.point(1)[0] == 5);
  CHECK(trunc.mean == 0);
  CHECK(trunc.f_of_mean == 0);
  CHECK(trunc.mean_of_f == doctest::Approx(371.0).epsilon(1e-3));
  CHECK(trunc.holds);

  CHECK_THROWS_AS(probabilistic_jensen_verify(Vector{-1, 2}, functions::log_squared()), DomainError);
}
