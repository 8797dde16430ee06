#include "relconvex/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "relconvex/error.hpp"
#include "relconvex/simplex.hpp"

namespace relconvex {

Interval::Interval(double lo_, double hi_, bool lo_open_, bool hi_open_)
    : lo(lo_), hi(hi_), lo_open(lo_open_ || std::isinf(lo_)), hi_open(hi_open_ || std::isinf(hi_)) {
  if (std::isnan(lo) || std::isnan(hi) || !(lo < hi)) throw InputError("interval requires lo < hi");
}

Interval Interval::real_line() {
  const double inf = std::numeric_limits<double>::infinity();
  return {-inf, inf, true, true};
}

bool Interval::contains(double x, double tol) const {
  // Tolerance widens closed ends only; open ends stay strict.
  if (std::isnan(x)) return false;
  const bool above = lo_open ? x > lo : x >= lo - tol;
  const bool below = hi_open ? x < hi : x <= hi + tol;
  return above && below;
}

bool Interval::bounded() const { return std::isfinite(lo) && std::isfinite(hi); }

std::string Interval::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << (lo_open ? '(' : '[') << lo << ", " << hi << (hi_open ? ')' : ']');
  return os.str();
}

Disc::Disc(std::array<double, 2> c, double r) : center(c), radius(r) {
  if (!(radius >= 0.0)) throw InputError("disc radius must be nonnegative");
}

bool Disc::contains(std::span<const double> p, double tol) const {
  if (p.size() != 2) throw InputError("disc membership needs a point in R^2");
  return std::hypot(p[0] - center[0], p[1] - center[1]) <= radius + tol;
}

Hull::Hull(std::vector<Vector> pts) : dimension(pts.empty() ? 0 : pts.front().size()), points(std::move(pts)) {
  if (points.empty()) throw InputError("hull needs at least one point");
  if (dimension == 0) throw InputError("hull points need positive dimension");
  for (const auto& p : points)
    if (p.size() != dimension) throw InputError("hull points have mixed dimension");
}

bool Hull::contains(std::span<const double> p, double tol) const {
  if (p.size() != dimension) throw InputError("hull membership dimension mismatch");
  if (dimension == 1) {
    double lo = points.front()[0], hi = lo;
    for (const auto& q : points) {
      lo = std::min(lo, q[0]);
      hi = std::max(hi, q[0]);
    }
    return p[0] >= lo - tol && p[0] <= hi + tol;
  }
  if (dimension == 2) {
    std::vector<geometry::Point2> pts;
    pts.reserve(points.size());
    for (const auto& q : points) pts.push_back({q[0], q[1]});
    const auto hull = geometry::convex_hull_2d(std::move(pts));
    return geometry::distance_to_hull_2d(hull, {p[0], p[1]}) <= tol;
  }
  // General dimension: convex weights w >= 0 with sum 1 and sum w_k q_k = p.
  const std::size_t k = points.size();
  Matrix a(dimension + 1, k);
  Vector b(dimension + 1);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t c = 0; c < dimension; ++c) a(c, j) = points[j][c];
    a(dimension, j) = 1.0;
  }
  for (std::size_t c = 0; c < dimension; ++c) b[c] = p[c];
  b[dimension] = 1.0;
  const auto res = lp::phase_one(a, b);
  const Vector reproduced = a * res.x;
  return max_abs_diff(reproduced, b) <= tol;
}

std::size_t Region::dimension() const {
  return std::visit(
      [](const auto& s) -> std::size_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Interval>) return 1;
        else if constexpr (std::is_same_v<T, Disc>) return 2;
        else return s.dimension;
      },
      shape_);
}

bool Region::contains(std::span<const double> p, double tol) const {
  if (p.size() != dimension()) return false;
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Interval>) return s.contains(p[0], tol);
        else return s.contains(p, tol);
      },
      shape_);
}

namespace geometry {

namespace {
double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double distance_to_segment(const Point2& a, const Point2& b, const Point2& p) {
  const double dx = b[0] - a[0], dy = b[1] - a[1];
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p[0] - (a[0] + t * dx), p[1] - (a[1] + t * dy));
}
}  // namespace

std::vector<Point2> convex_hull_2d(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

double distance_to_hull_2d(std::span<const Point2> hull, Point2 p) {
  if (hull.empty()) throw InputError("empty hull");
  if (hull.size() == 1) return std::hypot(p[0] - hull[0][0], p[1] - hull[0][1]);
  if (hull.size() == 2) return distance_to_segment(hull[0], hull[1], p);
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    if (cross(a, b, p) < 0.0) inside = false;
    best = std::min(best, distance_to_segment(a, b, p));
  }
  return inside ? 0.0 : best;
}

}  // namespace geometry

}  // namespace relconvex
