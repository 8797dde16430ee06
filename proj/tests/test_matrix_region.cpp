#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "relconvex/error.hpp"
#include "relconvex/matrix.hpp"
#include "relconvex/region.hpp"

using namespace relconvex;

namespace {

// Carathéodory in the plane: p is in the hull iff it lies in some triangle
// spanned by three of the points (or on a segment between two of them).
bool in_some_triangle(const std::vector<Vector>& pts, double px, double py, double tol) {
  auto cross = [](double ax, double ay, double bx, double by, double cx, double cy) {
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  };
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        const auto &a = pts[i], &b = pts[j], &c = pts[k];
        const double d1 = cross(a[0], a[1], b[0], b[1], px, py);
        const double d2 = cross(b[0], b[1], c[0], c[1], px, py);
        const double d3 = cross(c[0], c[1], a[0], a[1], px, py);
        const bool neg = d1 < -tol || d2 < -tol || d3 < -tol;
        const bool pos = d1 > tol || d2 > tol || d3 > tol;
        if (neg && pos) continue;
        // Degenerate triangles need an explicit bounding-box check.
        const double lo_x = std::min({a[0], b[0], c[0]}) - tol, hi_x = std::max({a[0], b[0], c[0]}) + tol;
        const double lo_y = std::min({a[1], b[1], c[1]}) - tol, hi_y = std::max({a[1], b[1], c[1]}) + tol;
        if (px >= lo_x && px <= hi_x && py >= lo_y && py <= hi_y) return true;
      }
  return false;
}

}  // namespace

TEST_CASE("matrix arithmetic") {
  const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
  const Matrix b = Matrix::from_rows({{0, 1}, {1, 0}});
  const Matrix ab = a * b;
  CHECK(ab(0, 0) == 2);
  CHECK(ab(0, 1) == 1);
  CHECK(ab(1, 0) == 4);
  CHECK(ab(1, 1) == 3);
  CHECK(a.transpose()(0, 1) == 3);
  CHECK(a.norm_inf() == 7);
  CHECK(a.norm_frobenius() == doctest::Approx(std::sqrt(30.0)));
  const Vector v{1, 1};
  const Vector av = a * std::span<const double>(v);
  CHECK(av[0] == 3);
  CHECK(av[1] == 7);
  CHECK((a - a).max_abs() == 0);
  CHECK((2.0 * a)(1, 1) == 8);
  CHECK(max_abs_diff(Vector{1, 2}, Vector{1.5, 2}) == 0.5);
  CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {3}}), InputError);
  CHECK_THROWS_AS(a * Matrix(3, 3), InputError);
}

TEST_CASE("interval membership and validation") {
  const Interval closed = Interval::closed(0, 1);
  CHECK(closed.contains(0));
  CHECK(closed.contains(1));
  CHECK_FALSE(closed.contains(1.1));
  CHECK(closed.contains(1 + 1e-10, 1e-9));

  const Interval half(0, 1, true, false);
  CHECK_FALSE(half.contains(0));
  CHECK_FALSE(half.contains(0, 1e-3));
  CHECK(half.contains(1e-9));

  const Interval line = Interval::real_line();
  CHECK(line.lo_open);
  CHECK(line.hi_open);
  CHECK(line.contains(1e300));
  CHECK_FALSE(line.bounded());

  const Interval ray(-2, std::numeric_limits<double>::infinity());
  CHECK(ray.hi_open);
  CHECK(ray.contains(-2));

  CHECK_THROWS_AS(Interval(1, 1), InputError);
  CHECK_THROWS_AS(Interval(2, 1), InputError);
}

TEST_CASE("disc membership") {
  const Disc d({0, 0}, 1);
  CHECK(d.contains(Vector{0.6, 0.8}));
  CHECK_FALSE(d.contains(Vector{0.8, 0.8}));
  CHECK(Disc({1, 1}, 0).contains(Vector{1, 1}));
  CHECK_THROWS_AS(Disc({0, 0}, -1), InputError);
}

TEST_CASE("hull membership in one, two and three dimensions") {
  const Hull seg({{-1}, {2}, {0.5}});
  CHECK(seg.contains(Vector{2}));
  CHECK_FALSE(seg.contains(Vector{2.1}));

  const Hull square({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}});
  CHECK(square.contains(Vector{0.5, 0.2}));
  CHECK(square.contains(Vector{1, 0.5}));
  CHECK_FALSE(square.contains(Vector{1.01, 0.5}));

  const Hull tetra({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(tetra.contains(Vector{0.2, 0.2, 0.2}));
  CHECK_FALSE(tetra.contains(Vector{0.5, 0.5, 0.5}));

  const Region r(square);
  CHECK(r.dimension() == 2);
  CHECK(r.contains(Vector{0.3, 0.3}));
  CHECK_THROWS_AS(Hull({}), InputError);
  CHECK_THROWS_AS(Hull({{0, 0}, {1}}), InputError);
}

TEST_CASE("planar hull agrees with a triangle-enumeration oracle") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vector> pts(1 + trial % 7, Vector(2));
    for (auto& p : pts) p = {u(rng), u(rng)};
    const Hull h(pts);
    for (int q = 0; q < 20; ++q) {
      const double x = 1.3 * u(rng), y = 1.3 * u(rng);
      const bool inside_strict = in_some_triangle(pts, x, y, -1e-7);
      const bool inside_loose = in_some_triangle(pts, x, y, 1e-7);
      // Skip points within 1e-7 of the boundary where both answers are fine.
      if (inside_strict == inside_loose) CHECK(h.contains(Vector{x, y}, 1e-9) == inside_loose);
    }
  }
}

TEST_CASE("monotone chain hull on degenerate input") {
  using geometry::convex_hull_2d;
  CHECK(convex_hull_2d({{1, 1}}).size() == 1);
  CHECK(convex_hull_2d({{0, 0}, {1, 1}, {2, 2}}).size() == 2);
  CHECK(convex_hull_2d({{0, 0}, {1, 0}, {0, 1}, {0.2, 0.2}}).size() == 3);
  const std::vector<geometry::Point2> seg{{0, 0}, {1, 0}};
  CHECK(geometry::distance_to_hull_2d(seg, {0.5, 1}) == doctest::Approx(1.0));
  CHECK(geometry::distance_to_hull_2d(seg, {2, 0}) == doctest::Approx(1.0));
}
