#pragma once

namespace relconvex {

/// Both sides of a checked inequality and its verdict.
///
/// `slack` is the signed amount by which the inequality holds in its stated
/// direction (negative when violated); `holds` is `slack >= -tol`.
struct Comparison {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;

  explicit operator bool() const { return holds; }

  static Comparison less_equal(double lhs, double rhs, double tol) {
    return {lhs, rhs, rhs - lhs, rhs - lhs >= -tol};
  }
  static Comparison greater_equal(double lhs, double rhs, double tol) {
    return {lhs, rhs, lhs - rhs, lhs - rhs >= -tol};
  }
};

}  // namespace relconvex
