#pragma once

#include <optional>

#include "relconvex/comparison.hpp"
#include "relconvex/matrix.hpp"
#include "relconvex/measures.hpp"

namespace relconvex {

/// Residuals of a candidate matrix A against the weighted majorization
/// conditions between mu_x (rows, weights lambda) and mu_y (columns, weights mu).
struct TransportResiduals {
  /// max(0, -min a_ij)
  double negativity = 0.0;
  /// max_i |sum_j a_ij - 1|
  double row_sum = 0.0;
  /// max_j |mu_j - sum_i a_ij lambda_i|
  double mass_transfer = 0.0;
  /// max_{i,c} |x_ic - sum_j a_ij y_jc|
  double barycenter = 0.0;
  bool passed = false;

  double max() const;
};

/// Row-stochastic matrix certifying mu_x majorized by mu_y.
struct RowStochasticCertificate {
  Matrix entries;
  TransportResiduals residuals;
};

/// Feasible(certificate) or Infeasible(phase-one objective).
class FeasibilityVerdict {
 public:
  static FeasibilityVerdict feasible(RowStochasticCertificate cert, double objective);
  static FeasibilityVerdict infeasible(double objective);

  bool is_feasible() const { return certificate_.has_value(); }
  explicit operator bool() const { return is_feasible(); }
  /// Throws when infeasible.
  const RowStochasticCertificate& certificate() const;
  double phase1_objective() const { return objective_; }

 private:
  std::optional<RowStochasticCertificate> certificate_;
  double objective_ = 0.0;
};

/// Recomputes every residual from scratch; passes iff all are <= tol.
/// Throws InputError on shape mismatch.
TransportResiduals verify_certificate(const Matrix& a, const WeightedMeasure& mu_x, const WeightedMeasure& mu_y,
                                      double tol = 1e-9);

/// Decides mu_x majorized by mu_y as phase-one feasibility over the entries of
/// a row-stochastic m-by-n matrix. Feasible iff the phase-one optimum is at
/// most m * tol and the recovered matrix verifies at tol.
///
/// Throws InputError on dimension mismatch and, separately, on total masses
/// differing by more than tol.
FeasibilityVerdict weighted_majorization_decide(const WeightedMeasure& mu_x, const WeightedMeasure& mu_y,
                                                double tol = 1e-9);

/// Checks sum lambda_i f(x_i) <= sum mu_j f(y_j) + tol.
///
/// This verifies the conclusion only; that the x_i are points of convexity is
/// the caller's responsibility. The relation is decided here unless a
/// certificate is supplied, and an infeasible relation throws
/// HypothesisError("measures not in majorization relation").
Comparison generalized_hlp_verify(const VectorFunction& f, const WeightedMeasure& mu_x, const WeightedMeasure& mu_y,
                                  double tol = 1e-9, const Matrix* certificate = nullptr);

Comparison generalized_hlp_verify(const ScalarFunction& f, const WeightedMeasure& mu_x, const WeightedMeasure& mu_y,
                                  double tol = 1e-9, const Matrix* certificate = nullptr);

}  // namespace relconvex
