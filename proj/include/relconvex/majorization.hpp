#pragma once

#include <cstddef>
#include <span>

#include "relconvex/comparison.hpp"
#include "relconvex/function.hpp"
#include "relconvex/matrix.hpp"

namespace relconvex {

/// Square nonnegative matrix with unit row and column sums.
class DoublyStochasticMatrix {
 public:
  /// Throws InputError unless is_doubly_stochastic(entries, tol).
  explicit DoublyStochasticMatrix(Matrix entries, double tol = 1e-12);

  std::size_t order() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

 private:
  Matrix entries_;
};

/// x sorted decreasingly; ties keep their original order.
Vector decreasing_rearrangement(std::span<const double> x);

/// Indices that sort x decreasingly, ties broken by index.
std::vector<std::size_t> decreasing_order(std::span<const double> x);

/// x is majorized by y: partial sums of x sorted decreasingly never exceed
/// those of y (absolute tolerance), and the totals agree within tol.
bool is_majorized(std::span<const double> x, std::span<const double> y, double tol = 1e-9);

/// Nonnegative entries and unit row/column sums, all within tol.
/// Throws InputError for a non-square matrix.
bool is_doubly_stochastic(const Matrix& a, double tol = 1e-12);

struct TransferCertificate {
  DoublyStochasticMatrix matrix;
  /// max_i |x_i - (A y)_i|
  double residual;
  /// Number of two-coordinate transfers composed.
  std::size_t transforms;
};

/// Builds a doubly stochastic A with x = A y from a chain of T-transforms
/// (Robin Hood transfers between two coordinates of the sorted y).
/// Throws InputError("not majorized") when x is not majorized by y.
TransferCertificate hlp_transfer_matrix(std::span<const double> x, std::span<const double> y, double tol = 1e-9);

/// sum f(x_i) <= sum f(y_i) + tol.
Comparison hlp_convex_sum_check(std::span<const double> x, std::span<const double> y, const ScalarFunction& f,
                                double tol = 1e-9);

}  // namespace relconvex
