#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "relconvex/matrix.hpp"

namespace relconvex {

/// Interval [lo, hi] on the real line; either end may be open or infinite.
/// Infinite ends are always open.
struct Interval {
  double lo;
  double hi;
  bool lo_open = false;
  bool hi_open = false;

  Interval(double lo, double hi, bool lo_open = false, bool hi_open = false);

  static Interval closed(double lo, double hi) { return {lo, hi, false, false}; }
  static Interval real_line();

  bool contains(double x, double tol = 0.0) const;
  bool bounded() const;
  bool interior(double x) const { return x > lo && x < hi; }
  std::string to_string() const;
};

/// Closed disc in the plane.
struct Disc {
  std::array<double, 2> center;
  double radius;

  Disc(std::array<double, 2> center, double radius);
  bool contains(std::span<const double> p, double tol = 0.0) const;
};

/// Convex hull of a finite point list in R^d.
struct Hull {
  std::size_t dimension;
  std::vector<Vector> points;

  explicit Hull(std::vector<Vector> points);
  bool contains(std::span<const double> p, double tol = 1e-9) const;
};

/// One of the three region shapes; membership is total on R^d.
class Region {
 public:
  Region(Interval i) : shape_(i) {}
  Region(Disc d) : shape_(d) {}
  Region(Hull h) : shape_(std::move(h)) {}

  std::size_t dimension() const;
  bool contains(std::span<const double> p, double tol = 1e-9) const;

  const std::variant<Interval, Disc, Hull>& shape() const { return shape_; }

 private:
  std::variant<Interval, Disc, Hull> shape_;
};

namespace geometry {

using Point2 = std::array<double, 2>;

/// Andrew's monotone chain; counter-clockwise, collinear points dropped.
/// Returns 1 point for a degenerate set, 2 for a segment.
std::vector<Point2> convex_hull_2d(std::vector<Point2> points);

/// Euclidean distance from p to the convex polygon (0 inside).
double distance_to_hull_2d(std::span<const Point2> hull, Point2 p);

}  // namespace geometry

}  // namespace relconvex
