#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "relconvex/error.hpp"
#include "relconvex/measures.hpp"
#include "relconvex/region.hpp"

using namespace relconvex;

TEST_CASE("barycenter examples") {
  CHECK(barycenter(WeightedMeasure::dirac({4.0}))[0] == 4.0);
  CHECK(barycenter(WeightedMeasure::on_line({-1, 1}, {0.5, 0.5}))[0] == doctest::Approx(0.0));
  CHECK(barycenter(WeightedMeasure::on_line({0, 3}, {1.0 / 3, 2.0 / 3}))[0] == doctest::Approx(2.0));
  const WeightedMeasure plane(2, {{0, 0}, {2, 0}, {0, 2}}, {1, 1, 2});
  const Vector b = barycenter(plane);
  CHECK(b[0] == doctest::Approx(0.5));
  CHECK(b[1] == doctest::Approx(1.0));
}

TEST_CASE("expectation examples") {
  const auto mu = WeightedMeasure::on_line({-1, 1}, {0.5, 0.5});
  CHECK(expectation(mu, functions::affine(0, 7)) == doctest::Approx(7.0));
  CHECK(expectation(mu, functions::square()) == doctest::Approx(1.0));
  CHECK(expectation(WeightedMeasure::on_line({1, std::numbers::e}, {0.5, 0.5}), functions::log_squared()) ==
        doctest::Approx(0.5));
  // Unnormalized weights are divided out.
  CHECK(expectation(WeightedMeasure::on_line({0, 2}, {3, 1}), functions::square()) == doctest::Approx(1.0));
}

TEST_CASE("expectation names the point outside the domain") {
  const auto mu = WeightedMeasure::uniform_on_line({1, -2});
  try {
    expectation(mu, functions::log_squared());
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("-2") != std::string::npos);
  }
}

TEST_CASE("vector-valued expectation") {
  const WeightedMeasure mu(2, {{1, 0}, {0, 1}}, {1, 3});
  const VectorFunction norm2 = [](std::span<const double> p) { return p[0] * p[0] + p[1] * p[1]; };
  CHECK(expectation(mu, norm2) == doctest::Approx(1.0));
}

TEST_CASE("normalize examples") {
  const auto a = normalize(WeightedMeasure::on_line({0, 1}, {2, 2}));
  CHECK(a.weight(0) == doctest::Approx(0.5));
  CHECK(a.total_mass() == doctest::Approx(1.0));
  const auto b = normalize(WeightedMeasure::on_line({0, 1, 2}, {1, 2, 3}));
  CHECK(b.weight(0) == doctest::Approx(1.0 / 6));
  CHECK(b.weight(1) == doctest::Approx(1.0 / 3));
  CHECK(b.weight(2) == doctest::Approx(0.5));
  const auto c = normalize(WeightedMeasure::on_line({5}, {1}));
  CHECK(c.weight(0) == 1.0);
}

TEST_CASE("empirical measures") {
  const auto one = empirical_from_samples(std::vector<Vector>{{2.0, 3.0}});
  CHECK(one.size() == 1);
  CHECK(one.weight(0) == 1.0);
  const Vector s{0, 0, 3};
  const auto three = empirical_from_samples(std::span<const double>(s));
  CHECK(three.weight(2) == doctest::Approx(1.0 / 3));
  CHECK(barycenter(three)[0] == doctest::Approx(1.0));
  CHECK_THROWS_AS(empirical_from_samples(std::vector<Vector>{}), InputError);

  // Die rolls: the sample mean is the oracle and must sit near 3.5.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> die(1, 6);
  Vector rolls(1000);
  double sum = 0.0;
  for (double& r : rolls) sum += (r = die(rng));
  const double b = barycenter(empirical_from_samples(std::span<const double>(rolls)))[0];
  CHECK(b == doctest::Approx(sum / 1000).epsilon(1e-12));
  CHECK(std::abs(b - 3.5) < 4 * std::sqrt(35.0 / 12.0 / 1000));
}

TEST_CASE("invalid measures are rejected") {
  CHECK_THROWS_AS(WeightedMeasure(1, {}, {}), InputError);
  CHECK_THROWS_AS(WeightedMeasure(1, {{1}}, {0}), InputError);
  CHECK_THROWS_AS(WeightedMeasure(1, {{1}}, {-1}), InputError);
  CHECK_THROWS_AS(WeightedMeasure(2, {{1}}, {1}), InputError);
  CHECK_THROWS_AS(WeightedMeasure(1, {{1}, {2}}, {1}), InputError);
  CHECK_THROWS_AS(WeightedMeasure(1, {{NAN}}, {1}), InputError);
}

TEST_CASE("properties on random measures") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-3, 3), w(0.1, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + trial % 3, k = 1 + trial % 5;
    std::vector<Vector> pts(k, Vector(d));
    Vector weights(k);
    for (auto& p : pts)
      for (double& c : p) c = u(rng);
    for (double& x : weights) x = w(rng);
    const WeightedMeasure mu(d, pts, weights);

    const Vector b1 = barycenter(mu), b2 = barycenter(normalize(mu));
    for (std::size_t c = 0; c < d; ++c) CHECK(std::abs(b1[c] - b2[c]) <= 1e-12);
    CHECK(Hull(pts).contains(b1, 1e-9));

    if (d == 1) {
      const double alpha = u(rng), beta = u(rng);
      const auto f = functions::square(), g = functions::exponential();
      const ScalarFunction combo("combo", [&](double t) { return alpha * f(t) + beta * g(t); },
                                 Interval::real_line());
      CHECK(std::abs(expectation(mu, combo) - (alpha * expectation(mu, f) + beta * expectation(mu, g))) <= 1e-10);
    }
  }
}
