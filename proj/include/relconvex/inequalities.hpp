#pragma once

#include <array>
#include <optional>
#include <span>

#include "relconvex/comparison.hpp"
#include "relconvex/function.hpp"
#include "relconvex/measures.hpp"

namespace relconvex {

/// Six-point families pairing a triplet's pairwise midpoints (x) with the
/// triplet and its mean (y); uniform measures on them are in majorization.
struct SexticWitness {
  enum class Case {
    /// a >= mean >= b >= c: y = (a, m, m, m, b, c)
    mean_above_middle,
    /// a >= b >= mean >= c: y = (a, b, m, m, m, c)
    mean_below_middle,
  };
  std::array<double, 6> x;
  std::array<double, 6> y;
  Case which;
};

/// Sorts (a, b, c) decreasingly and builds the witness. A mean equal to the
/// middle value takes the first case.
SexticWitness popoviciu_witness(double a, double b, double c);

/// (f(a)+f(b)+f(c))/3 + f((a+b+c)/3) >= (2/3)[f((a+b)/2) + f((a+c)/2) + f((b+c)/2)] - tol.
Comparison popoviciu_verify(const ScalarFunction& f, double a, double b, double c, double tol = 1e-9);

/// sum l_k x_k e^{x_k} >= (sum l_k x_k) e^{sum l_k x_k} - tol, for weights summing
/// to one and a weighted mean >= -1. Throws InputError on bad weights and
/// HypothesisError("outside certified region") when the mean is below -1.
Comparison xexp_weighted_jensen_verify(std::span<const double> lambdas, std::span<const double> xs,
                                       double tol = 1e-9);

/// The constant max{2, e(1 - 1/n)} / n.
double borwein_girgensohn_constant(std::size_t n);

/// sum x_k e^{x_k} >= C_n sum x_k^2 - tol for sum x_k >= 0.
/// Throws HypothesisError("hypothesis violated") when the sum is negative.
Comparison borwein_girgensohn_verify(std::span<const double> xs, double tol = 1e-9);

/// Elementary symmetric functions (e1, e2, e3) of a triplet.
std::array<double, 3> elementary_symmetric(const std::array<double, 3>& v);

/// sum log^2 x_i <= sum log^2 y_i + tol for positive triplets with
/// e1(x) <= e1(y), e2(x) <= e2(y) and e3(x) = e3(y) (all within tol).
/// A failing hypothesis throws HypothesisError naming it.
Comparison bnl_triplet_verify(const std::array<double, 3>& x, const std::array<double, 3>& y, double tol = 1e-9);

struct ProbabilisticJensenReport {
  double mean;
  double f_of_mean;
  double mean_of_f;
  bool holds;
  /// Support after clamping to [-n, n] (equal to the input without truncation).
  WeightedMeasure support;
};

/// f(E X) <= E f(X) + tol on a discrete distribution, optionally after
/// clamping X to [-level, level]. Whether E X is a point of convexity is not
/// checked here. A support point outside the domain throws DomainError.
ProbabilisticJensenReport probabilistic_jensen_verify(const WeightedMeasure& dist, const ScalarFunction& f,
                                                      std::optional<double> truncation_level = std::nullopt,
                                                      double tol = 1e-9);

ProbabilisticJensenReport probabilistic_jensen_verify(std::span<const double> samples, const ScalarFunction& f,
                                                      std::optional<double> truncation_level = std::nullopt,
                                                      double tol = 1e-9);

}  // namespace relconvex
