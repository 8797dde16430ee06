#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "relconvex/comparison.hpp"
#include "relconvex/transport.hpp"

namespace relconvex {

using Complex = std::complex<double>;

/// c_0 + c_1 z + ... + c_n z^n with c_n != 0.
class ComplexPolynomial {
 public:
  /// Ascending coefficients; throws InputError when empty or |c_n| <= 1e-300.
  explicit ComplexPolynomial(std::vector<Complex> coefficients);
  static ComplexPolynomial from_real(std::span<const double> coefficients);
  /// Monic polynomial with the given roots.
  static ComplexPolynomial from_roots(std::span<const Complex> roots);

  std::size_t degree() const { return c_.size() - 1; }
  const std::vector<Complex>& coefficients() const { return c_; }
  Complex leading() const { return c_.back(); }
  Complex operator()(Complex z) const;

 private:
  std::vector<Complex> c_;
};

/// Term-by-term derivative. Throws InputError for a constant.
ComplexPolynomial derivative(const ComplexPolynomial& p);

struct RootOptions {
  /// Relative size of the last Aberth correction that counts as converged.
  double tol = 1e-12;
  std::size_t max_iterations = 200;
  /// Roots closer than this are merged to their mean (multiplicity).
  double cluster_radius = 1e-6;
};

/// All n roots with multiplicity (Aberth-Ehrlich simultaneous iteration in
/// extended precision, started on a perturbed circle of Cauchy-bound
/// radius). Sorted by real part, then imaginary part. Throws
/// ConvergenceError with the best iterate if the iteration stalls.
std::vector<Complex> roots(const ComplexPolynomial& p, const RootOptions& opts = {});

/// Every root of P' lies within tol of the convex hull of the roots of P.
bool gauss_lucas_check(const ComplexPolynomial& p, double tol = 1e-9);

/// Decides (1/(n-1)) sum delta_{mu_k} majorized by (1/n) sum delta_{lambda_j}
/// in the plane, mu_k the roots of P' and lambda_j those of P.
FeasibilityVerdict malamud_majorization_check(const ComplexPolynomial& p, double tol = 1e-9);

using PlaneFunction = std::function<double(Complex)>;

/// (1/(n-1)) sum f(mu_k) <= (1/n) sum f(lambda_j) + tol.
Comparison debruijn_springer_verify(const ComplexPolynomial& p, const PlaneFunction& f, double tol = 1e-9);

/// Radius of the disc on which the tangent planes of exp(-|w|^2) at points
/// with |w| <= 1/2 stay above the graph (tangent crossing of exp(-t^2) at 1/2).
double gauss_concavity_radius();

/// (1/(n-1)) sum exp(-|mu_k|^2) >= (1/n) sum exp(-|lambda_j|^2) - tol, given
/// |mu_k| <= 1/2 and |lambda_j| <= gauss_concavity_radius() (within tol).
/// A root outside its disc throws HypothesisError naming root and disc.
Comparison relative_concavity_verify(const ComplexPolynomial& p, double tol = 1e-9);

}  // namespace relconvex
