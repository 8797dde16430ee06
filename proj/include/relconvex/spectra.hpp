#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "relconvex/comparison.hpp"
#include "relconvex/function.hpp"
#include "relconvex/matrix.hpp"

namespace relconvex {

/// Square matrix with |A_ij - A_ji| <= 1e-12 max(1, ||A||_inf).
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(Matrix entries);
  static SymmetricMatrix diagonal(std::span<const double> d);

  std::size_t order() const { return m_.rows(); }
  const Matrix& entries() const { return m_; }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  Vector diagonal_entries() const;

  friend SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b);
  friend SymmetricMatrix operator*(double s, const SymmetricMatrix& a);

 private:
  Matrix m_;
};

struct EigenDecomposition {
  /// Sorted decreasingly.
  Vector values;
  /// Column k is the unit eigenvector of values[k].
  Matrix vectors;
  std::size_t sweeps;
};

/// Cyclic-by-row Jacobi rotations until the off-diagonal Frobenius norm is
/// at most tol * ||A||_F (at most 100 sweeps).
EigenDecomposition jacobi_eigen(const SymmetricMatrix& a, double tol = 1e-15);

/// sum_i f(lambda_i(A)). An eigenvalue outside the domain of f throws DomainError.
double trace_f(const SymmetricMatrix& a, const ScalarFunction& f);

/// Every eigenvalue lies in the interval (closed ends widened by tol).
bool spectrum_in(const SymmetricMatrix& a, const Interval& region, double tol = 1e-9);

/// Which spectral class an input matrix falls in.
enum class SpectralSet { concave_side, convex_side, both };

struct TraceInequalityReport {
  Comparison comparison;
  std::vector<SpectralSet> membership;
  double mean_min_eigenvalue;
};

/// sum_k l_k tr(A_k e^{A_k}) >= tr(A e^{A}) - tol for A = sum_k l_k A_k.
///
/// Each A_k must have spectrum in (-inf, -2] or in [-2, inf), and A must
/// satisfy A >= -I in the Loewner order; failures raise HypothesisError with
/// distinct messages. Weights must be positive and sum to 1 (InputError).
TraceInequalityReport trace_inequality_verify(std::span<const double> lambdas,
                                              const std::vector<SymmetricMatrix>& as, double tol = 1e-9);

/// diag(A) is majorized by the eigenvalues of A.
bool schur_horn_check(const SymmetricMatrix& a, double tol = 1e-9);

}  // namespace relconvex
