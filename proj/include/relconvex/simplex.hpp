#pragma once

#include <cstddef>

#include "relconvex/matrix.hpp"

namespace relconvex::lp {

struct PhaseOneOptions {
  /// Smallest column entry accepted as a pivot.
  double pivot_tol = 1e-9;
  /// Primal infeasibility the ratio test may introduce to pick a larger pivot.
  double feasibility_tol = 1e-11;
  /// Consecutive non-improving pivots before switching to the strict
  /// smallest-index ratio test.
  std::size_t max_degenerate = 50;
  std::size_t max_iterations = 100000;
};

enum class PhaseOneStatus { optimal, iteration_limit };

/// Outcome of minimizing the sum of artificial variables for A x = b, x >= 0.
struct PhaseOneResult {
  PhaseOneStatus status = PhaseOneStatus::optimal;
  /// Sum of the artificial variables at termination, measured as the L1
  /// residual of the original system at x; zero iff a feasible x was found.
  double objective = 0.0;
  /// Basic solution for the original variables (nonnegative).
  Vector x;
  std::size_t iterations = 0;
};

/// Phase-one simplex on a dense tableau with Bland's anti-cycling rule.
///
/// The entering column is always the lowest-index one with negative reduced
/// cost. The leaving row comes from a two-pass (Harris) ratio test that
/// prefers large pivots; after max_degenerate stalled pivots the ratio test
/// reverts to Bland's smallest-basis-index choice until progress resumes.
///
/// Rows with negative right-hand side are negated first so the artificial
/// basis is primal feasible. Redundant or degenerate rows are tolerated: a
/// redundant row leaves its artificial basic at level zero.
PhaseOneResult phase_one(const Matrix& a, const Vector& b, const PhaseOneOptions& opts = {});

}  // namespace relconvex::lp
