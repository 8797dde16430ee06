#include "relconvex/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "relconvex/error.hpp"
#include "relconvex/majorization.hpp"

namespace relconvex {

SymmetricMatrix::SymmetricMatrix(Matrix entries) : m_(std::move(entries)) {
  if (!m_.square() || m_.rows() == 0) throw InputError("symmetric matrix must be square and nonempty");
  const double band = 1e-12 * std::max(1.0, m_.norm_inf());
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (std::abs(m_(i, j) - m_(j, i)) > band)
        throw InputError("matrix is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return SymmetricMatrix(std::move(m));
}

Vector SymmetricMatrix::diagonal_entries() const {
  Vector d(order());
  for (std::size_t i = 0; i < order(); ++i) d[i] = m_(i, i);
  return d;
}

SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b) { return SymmetricMatrix(a.m_ + b.m_); }

SymmetricMatrix operator*(double s, const SymmetricMatrix& a) { return SymmetricMatrix(s * a.m_); }

EigenDecomposition jacobi_eigen(const SymmetricMatrix& sym, double tol) {
  const std::size_t n = sym.order();
  Matrix a = sym.entries();
  // Symmetrize exactly so rotations see a truly symmetric matrix.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (a(i, j) + a(j, i));
  Matrix v = Matrix::identity(n);
  const double scale = a.norm_frobenius();

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  std::size_t sweeps = 0;
  while (sweeps < 100 && off_norm() > tol * scale) {
    ++sweeps;
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p), aqq = a(q, q);
        // Rotation angle from the 2x2 symmetric Schur decomposition.
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        if (s == 0.0) continue;
        rotated = true;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
  EigenDecomposition out{Vector(n), Matrix(n, n), sweeps};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

double trace_f(const SymmetricMatrix& a, const ScalarFunction& f) {
  double s = 0.0;
  for (double lam : jacobi_eigen(a).values) {
    if (!f.domain().contains(lam)) {
      std::ostringstream os;
      os.precision(17);
      os << "eigenvalue " << lam << " lies outside the domain " << f.domain().to_string() << " of '" << f.name()
         << "'";
      throw DomainError(os.str());
    }
    s += f(lam);
  }
  return s;
}

bool spectrum_in(const SymmetricMatrix& a, const Interval& region, double tol) {
  for (double lam : jacobi_eigen(a).values)
    if (!region.contains(lam, tol)) return false;
  return true;
}

TraceInequalityReport trace_inequality_verify(std::span<const double> lambdas, const std::vector<SymmetricMatrix>& as,
                                              double tol) {
  if (lambdas.size() != as.size() || as.empty()) throw InputError("weights and matrices must be nonempty and match");
  const std::size_t n = as.front().order();
  double total = 0.0;
  for (std::size_t k = 0; k < as.size(); ++k) {
    if (as[k].order() != n) throw InputError("matrices have different orders");
    if (!(lambdas[k] > 0.0)) throw InputError("weight " + std::to_string(k) + " is not positive");
    total += lambdas[k];
  }
  if (std::abs(total - 1.0) > tol) throw InputError("weights do not sum to 1");

  const double inf = std::numeric_limits<double>::infinity();
  const Interval concave_side(-inf, -2.0, true, false);
  const Interval convex_side(-2.0, inf, false, true);
  const auto f = functions::xexp();

  TraceInequalityReport report{{}, {}, 0.0};
  Matrix mean(n, n);
  double lhs = 0.0;
  for (std::size_t k = 0; k < as.size(); ++k) {
    const bool lo = spectrum_in(as[k], concave_side, tol);
    const bool hi = spectrum_in(as[k], convex_side, tol);
    if (!lo && !hi)
      throw HypothesisError("spectrum hypothesis fails: matrix " + std::to_string(k) +
                            " has eigenvalues on both sides of -2");
    report.membership.push_back(lo && hi ? SpectralSet::both : lo ? SpectralSet::concave_side : SpectralSet::convex_side);
    lhs += lambdas[k] * trace_f(as[k], f);
    mean = mean + lambdas[k] * as[k].entries();
  }
  const SymmetricMatrix avg(mean);
  const auto eig = jacobi_eigen(avg);
  report.mean_min_eigenvalue = eig.values.back();
  if (report.mean_min_eigenvalue < -1.0 - tol) {
    std::ostringstream os;
    os.precision(17);
    os << "mean-matrix hypothesis fails: smallest eigenvalue " << report.mean_min_eigenvalue << " < -1";
    throw HypothesisError(os.str());
  }
  double rhs = 0.0;
  for (double lam : eig.values) rhs += f(lam);
  report.comparison = Comparison::greater_equal(lhs, rhs, tol);
  return report;
}

bool schur_horn_check(const SymmetricMatrix& a, double tol) {
  return is_majorized(a.diagonal_entries(), jacobi_eigen(a).values, tol);
}

}  // namespace relconvex
