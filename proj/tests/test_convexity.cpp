#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "relconvex/convexity.hpp"
#include "relconvex/error.hpp"

using namespace relconvex;

namespace {

constexpr double kAStar = 5.495869874;
constexpr double kRStar = 1.183802;

bool certified(const CertifyResult& r) { return std::holds_alternative<SupportCertificate>(r); }

}  // namespace

TEST_CASE("support line for a global minimum") {
  const auto r = support_line_certify(functions::square(), 0.0, Interval::closed(-1, 1));
  REQUIRE(certified(r));
  const auto& c = std::get<SupportCertificate>(r);
  CHECK(c.slope == 0.0);
  CHECK(std::abs(c.min_margin) <= 1e-15);
  CHECK(std::abs(c.argmin) <= 1e-6);
  CHECK_FALSE(c.truncated);
}

TEST_CASE("xexp is certified at -1 and refuted at -3") {
  const auto f = functions::xexp();
  CHECK(certified(support_line_certify(f, -1.0, Interval::closed(-20, 20))));
  const auto r = support_line_certify(f, -3.0, Interval::closed(-20, 20));
  REQUIRE_FALSE(certified(r));
  const auto& ref = std::get<Refutation>(r);
  // Independent check: the tangent at -3 lies above f at the witness.
  const double slope = std::exp(-3.0) * (1 - 3.0);
  const double h = f(-3.0) + slope * (ref.witness + 3.0);
  CHECK(f(ref.witness) < h - 1e-9);
  // The tangent is above the graph half a unit on either side.
  CHECK(f(-3.5) < f(-3.0) + slope * -0.5);
  CHECK(f(-2.5) < f(-3.0) + slope * 0.5);
}

TEST_CASE("certification without a derivative") {
  const auto f = functions::abs_x2_minus_1();
  CHECK(certified(support_line_certify(f, 1.5, Interval::closed(-10, 10))));
  CHECK(certified(support_line_certify(f, -2.0, Interval::closed(-10, 10))));
  CHECK_FALSE(certified(support_line_certify(f, 0.5, Interval::closed(-10, 10))));
}

TEST_CASE("certification preconditions and truncation") {
  const auto f = functions::xexp();
  CHECK_THROWS_AS(support_line_certify(f, 30.0, Interval::closed(-20, 20)), InputError);
  CHECK_THROWS_AS(support_line_certify(functions::log_squared(), 1.0, Interval::closed(-1, 2)), InputError);
  const auto r = support_line_certify(f, 0.0, Interval::real_line());
  REQUIRE(certified(r));
  CHECK(std::get<SupportCertificate>(r).truncated);
  CHECK(std::get<SupportCertificate>(r).region.lo == doctest::Approx(-50));
}

TEST_CASE("convexity boundaries") {
  const auto a = convexity_boundary(functions::log_squared(), 2.0, Direction::right);
  REQUIRE(a);
  CHECK(std::abs(a->point - kAStar) <= 1e-6);
  const double la = std::log(a->point), l2 = std::log(2.0);
  CHECK(std::abs(la * la - l2 * l2 - l2 * (a->point - 2)) <= 1e-9);

  const auto r = convexity_boundary(functions::gauss1d(), 0.5, Direction::right);
  REQUIRE(r);
  CHECK(std::abs(r->point - kRStar) <= 1e-5);
  CHECK(std::abs(std::exp(-0.25) * (1.5 - r->point) - std::exp(-r->point * r->point)) <= 1e-9);

  CHECK_FALSE(convexity_boundary(functions::square(), 0.3, Direction::right));
  CHECK_FALSE(convexity_boundary(functions::square(), -4.0, Direction::left));
  CHECK_THROWS_AS(convexity_boundary(functions::abs_x2_minus_1(), 2.0, Direction::right), InputError);
}

TEST_CASE("tangency at the boundary point") {
  const double tol = 1e-9;
  for (const auto& [f, a, dir] : {std::tuple{functions::log_squared(), 2.0, Direction::right},
                                 std::tuple{functions::gauss1d(), 0.5, Direction::right},
                                 std::tuple{functions::gauss1d(), -0.5, Direction::left},
                                 std::tuple{functions::xexp(), -3.0, Direction::right}}) {
    const auto b = convexity_boundary(f, a, dir, tol);
    REQUIRE(b);
    const double h = f(a) + f.derivative(a) * (b->point - a);
    CHECK(std::abs(f(b->point) - h) <= 10 * tol);
  }
}

TEST_CASE("boundary consistency for log squared") {
  const auto f = functions::log_squared();
  CHECK(certified(support_line_certify(f, 2.0, Interval(0, kAStar - 1e-3, true, false))));
  CHECK_FALSE(certified(support_line_certify(f, 2.0, Interval(0, kAStar + 1e-1, true, false))));
}

TEST_CASE("jensen at a point") {
  const auto f = functions::xexp();
  const auto dirac = jensen_at_point_verify(f, 0.7, WeightedMeasure::dirac({0.7}));
  CHECK(dirac.holds);
  CHECK(std::abs(dirac.slack) <= 1e-15);

  const auto two = jensen_at_point_verify(f, -1.0, WeightedMeasure::uniform_on_line({-4, 2}));
  CHECK(two.holds);
  CHECK(two.lhs == doctest::Approx(-std::exp(-1.0)));
  CHECK(two.rhs == doctest::Approx((-4 * std::exp(-4.0) + 2 * std::exp(2.0)) / 2));

  const auto conc =
      jensen_at_point_verify(functions::gauss1d(), 0.0, WeightedMeasure::uniform_on_line({-0.5, 0.5}), 1e-9,
                             Sense::concavity);
  CHECK(conc.holds);
  CHECK(conc.lhs == 1.0);
  CHECK(conc.rhs == doctest::Approx(std::exp(-0.25)));
  CHECK_FALSE(jensen_at_point_verify(functions::gauss1d(), 0.0, WeightedMeasure::uniform_on_line({-0.5, 0.5})).holds);

  CHECK_THROWS_AS(jensen_at_point_verify(f, 0.0, WeightedMeasure::uniform_on_line({-4, 2})), HypothesisError);
}

TEST_CASE("random falsifier") {
  FalsifierOptions opts;
  opts.trials = 10000;
  opts.seed = 42;
  const auto sq = random_convexity_falsifier(functions::square(), 0.3, Interval::closed(-5, 5), opts);
  CHECK(sq.passed);
  CHECK(sq.trials_run == 10000);

  const auto bad = random_convexity_falsifier(functions::xexp(), -3.0, Interval::closed(-10, 10), opts);
  REQUIRE_FALSE(bad.passed);
  REQUIRE(bad.counterexample);
  // Recheck the counterexample by direct evaluation.
  const auto& mu = *bad.counterexample;
  CHECK(std::abs(barycenter(mu)[0] + 3.0) <= 1e-9);
  double ef = 0, w = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const double t = mu.point(i)[0];
    ef += mu.weight(i) * t * std::exp(t);
    w += mu.weight(i);
  }
  CHECK(ef / w < -3.0 * std::exp(-3.0) - 1e-9);

  CHECK(random_convexity_falsifier(functions::abs_x2_minus_1(), 1.5, Interval::closed(-10, 10), opts).passed);
}

TEST_CASE("certificates and the falsifier agree") {
  FalsifierOptions opts;
  opts.trials = 2000;
  const std::vector<ScalarFunction> suite{functions::xexp(), functions::gauss1d(), functions::square(),
                                          functions::abs_x2_minus_1()};
  std::size_t certified_count = 0;
  for (const auto& f : suite)
    for (double a = -3.0; a <= 3.0; a += 0.75) {
      const auto region = Interval::closed(-6, 6);
      if (certified(support_line_certify(f, a, region))) {
        ++certified_count;
        CHECK_MESSAGE(random_convexity_falsifier(f, a, region, opts).passed, f.name() << " at " << a);
      }
    }
  CHECK(certified_count >= 10);
}

TEST_CASE("radial reduction for the planar gaussian") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi), rad(0, 0.5);
  for (int trial = 0; trial < 50; ++trial) {
    const double r0 = rad(rng), phi = angle(rng);
    const std::array<double, 2> u{std::cos(phi), std::sin(phi)};
    const std::array<double, 2> w0{r0 * u[0], r0 * u[1]};
    for (int i = 0; i <= 40; ++i)
      for (int j = 0; j < 64; ++j) {
        const double rho = kRStar * i / 40.0, theta = 2 * std::numbers::pi * j / 64.0;
        const std::array<double, 2> w{rho * std::cos(theta), rho * std::sin(theta)};
        const double t = w[0] * u[0] + w[1] * u[1];
        const double plane = radial::gauss_tangent_plane_margin(w0, w);
        // Moving off the line through w0 and the origin only lowers the graph.
        CHECK(plane >= radial::gauss_profile_margin(r0, t) - 1e-8);
        CHECK(plane >= -1e-8);
      }
    // On that line the two margins coincide.
    for (int i = -40; i <= 40; ++i) {
      const double t = kRStar * i / 40.0;
      const double plane = radial::gauss_tangent_plane_margin(w0, {t * u[0], t * u[1]});
      CHECK(std::abs(plane - radial::gauss_profile_margin(r0, t)) <= 1e-8);
    }
  }
}
