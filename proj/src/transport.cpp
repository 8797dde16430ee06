#include "relconvex/transport.hpp"

#include <algorithm>
#include <cmath>

#include "relconvex/error.hpp"
#include "relconvex/simplex.hpp"

namespace relconvex {

double TransportResiduals::max() const { return std::max({negativity, row_sum, mass_transfer, barycenter}); }

FeasibilityVerdict FeasibilityVerdict::feasible(RowStochasticCertificate cert, double objective) {
  FeasibilityVerdict v;
  v.certificate_ = std::move(cert);
  v.objective_ = objective;
  return v;
}

FeasibilityVerdict FeasibilityVerdict::infeasible(double objective) {
  FeasibilityVerdict v;
  v.objective_ = objective;
  return v;
}

const RowStochasticCertificate& FeasibilityVerdict::certificate() const {
  if (!certificate_) throw Error("verdict is infeasible; no certificate");
  return *certificate_;
}

TransportResiduals verify_certificate(const Matrix& a, const WeightedMeasure& mu_x, const WeightedMeasure& mu_y,
                                      double tol) {
  const std::size_t m = mu_x.size(), n = mu_y.size(), d = mu_x.dimension();
  if (a.rows() != m || a.cols() != n) throw InputError("certificate shape does not match the measures");
  if (mu_y.dimension() != d) throw InputError("measures have different dimensions");

  TransportResiduals r;
  for (std::size_t i = 0; i < m; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      r.negativity = std::max(r.negativity, -a(i, j));
      row += a(i, j);
    }
    r.row_sum = std::max(r.row_sum, std::abs(row - 1.0));
  }
  for (std::size_t j = 0; j < n; ++j) {
    double moved = 0.0;
    for (std::size_t i = 0; i < m; ++i) moved += a(i, j) * mu_x.weight(i);
    r.mass_transfer = std::max(r.mass_transfer, std::abs(mu_y.weight(j) - moved));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < d; ++c) {
      double combo = 0.0;
      for (std::size_t j = 0; j < n; ++j) combo += a(i, j) * mu_y.point(j)[c];
      r.barycenter = std::max(r.barycenter, std::abs(mu_x.point(i)[c] - combo));
    }
  }
  r.passed = r.max() <= tol;
  return r;
}

FeasibilityVerdict weighted_majorization_decide(const WeightedMeasure& mu_x, const WeightedMeasure& mu_y,
                                                double tol) {
  if (mu_x.dimension() != mu_y.dimension()) throw InputError("measures have different dimensions");
  if (std::abs(mu_x.total_mass() - mu_y.total_mass()) > tol)
    throw InputError("measures have different total masses");

  const std::size_t m = mu_x.size(), n = mu_y.size(), d = mu_x.dimension();
  // Rows: m unit row sums, n-1 mass transfers (the last follows from the
  // others by mass balance), m*d barycentric identities.
  const std::size_t eqs = m + (n - 1) + m * d;
  Matrix lhs(eqs, m * n);
  Vector rhs(eqs, 0.0);
  std::size_t r = 0;
  for (std::size_t i = 0; i < m; ++i, ++r) {
    for (std::size_t j = 0; j < n; ++j) lhs(r, i * n + j) = 1.0;
    rhs[r] = 1.0;
  }
  for (std::size_t j = 0; j + 1 < n; ++j, ++r) {
    for (std::size_t i = 0; i < m; ++i) lhs(r, i * n + j) = mu_x.weight(i);
    rhs[r] = mu_y.weight(j);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < d; ++c, ++r) {
      for (std::size_t j = 0; j < n; ++j) lhs(r, i * n + j) = mu_y.point(j)[c];
      rhs[r] = mu_x.point(i)[c];
    }
  }

  const auto lp = lp::phase_one(lhs, rhs);
  if (lp.status != lp::PhaseOneStatus::optimal) throw ConvergenceError("phase-one simplex hit its iteration limit");
  if (lp.objective > static_cast<double>(m) * tol) return FeasibilityVerdict::infeasible(lp.objective);

  Matrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = lp.x[i * n + j];
  TransportResiduals res = verify_certificate(a, mu_x, mu_y, tol);
  if (!res.passed) return FeasibilityVerdict::infeasible(std::max(lp.objective, res.max()));
  return FeasibilityVerdict::feasible({std::move(a), res}, lp.objective);
}

Comparison generalized_hlp_verify(const VectorFunction& f, const WeightedMeasure& mu_x, const WeightedMeasure& mu_y,
                                  double tol, const Matrix* certificate) {
  if (certificate) {
    if (!verify_certificate(*certificate, mu_x, mu_y, tol).passed)
      throw HypothesisError("measures not in majorization relation (certificate fails verification)");
  } else if (!weighted_majorization_decide(mu_x, mu_y, tol)) {
    throw HypothesisError("measures not in majorization relation");
  }
  double lhs = 0.0, rhs = 0.0;
  for (std::size_t i = 0; i < mu_x.size(); ++i) lhs += mu_x.weight(i) * f(mu_x.point(i));
  for (std::size_t j = 0; j < mu_y.size(); ++j) rhs += mu_y.weight(j) * f(mu_y.point(j));
  return Comparison::less_equal(lhs, rhs, tol);
}

Comparison generalized_hlp_verify(const ScalarFunction& f, const WeightedMeasure& mu_x, const WeightedMeasure& mu_y,
                                  double tol, const Matrix* certificate) {
  if (mu_x.dimension() != 1 || mu_y.dimension() != 1)
    throw InputError("scalar function needs one-dimensional measures");
  return generalized_hlp_verify([&f](std::span<const double> p) { return f(p[0]); }, mu_x, mu_y, tol, certificate);
}

}  // namespace relconvex
