#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relconvex/region.hpp"

namespace relconvex {

/// A real function on an interval, with an optional derivative.
///
/// When a derivative is supplied it is compared against central differences
/// at 100 interior points on construction; a mismatch beyond 1e-5 relative
/// is rejected as an InputError.
class ScalarFunction {
 public:
  using Fn = std::function<double(double)>;

  ScalarFunction(std::string name, Fn value, Interval domain, std::optional<Fn> derivative = std::nullopt);

  /// Checked evaluation: throws DomainError outside the domain or on a non-finite value.
  double operator()(double t) const;
  /// Unchecked evaluation.
  double raw(double t) const { return value_(t); }

  bool has_derivative() const { return derivative_.has_value(); }
  double derivative(double t) const;

  const Interval& domain() const { return domain_; }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  Fn value_;
  Interval domain_;
  std::optional<Fn> derivative_;
};

namespace functions {

/// t e^t on the real line.
ScalarFunction xexp();
/// e^{-t^2} on the real line.
ScalarFunction gauss1d();
/// log^2 t on (0, inf).
ScalarFunction log_squared();
ScalarFunction square();
/// |t^2 - 1|, no derivative supplied.
ScalarFunction abs_x2_minus_1();
ScalarFunction affine(double slope, double intercept);
ScalarFunction absolute();
ScalarFunction exponential();
/// max(t, 0).
ScalarFunction positive_part();

/// Built-ins by CLI name: xexp, gauss1d, log2, square, absx2m1.
std::optional<ScalarFunction> builtin(std::string_view name);
std::vector<std::string> builtin_names();

/// Parses an arithmetic expression in the variable t (or x).
///
/// Supports + - * / ^, parentheses, the constants e and pi, and the
/// functions exp log sqrt abs sin cos tanh. The domain is the real line;
/// evaluations that produce NaN or infinity raise DomainError.
ScalarFunction parse_expression(std::string_view text);

/// Built-in name first, then expression.
ScalarFunction resolve(std::string_view name_or_expr);

}  // namespace functions

}  // namespace relconvex
