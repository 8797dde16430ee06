#include "relconvex/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "relconvex/convexity.hpp"
#include "relconvex/error.hpp"
#include "relconvex/region.hpp"

namespace relconvex {

namespace {

using LComplex = std::complex<long double>;

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

// Positive root of |c_n| x^n - sum_{k<n} |c_k| x^k; every root has modulus <= it.
long double cauchy_radius(const std::vector<LComplex>& c) {
  const std::size_t n = c.size() - 1;
  const long double lead = std::abs(c[n]);
  auto poly = [&](long double x) {
    long double s = lead;
    for (std::size_t k = n; k-- > 0;) s = s * x - std::abs(c[k]);
    return s;
  };
  long double hi = 1.0L;
  for (std::size_t k = 0; k < n; ++k) hi = std::max(hi, 2.0L * std::pow(std::abs(c[k]) / lead, 1.0L / (n - k)));
  long double lo = 0.0L;
  if (poly(hi) < 0.0L) return hi;
  for (int it = 0; it < 200; ++it) {
    const long double mid = 0.5L * (lo + hi);
    if (poly(mid) < 0.0L)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

}  // namespace

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) throw InputError("polynomial needs at least one coefficient");
  for (const auto& v : c_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw InputError("polynomial coefficient is not finite");
  if (!(std::abs(c_.back()) > 1e-300)) throw InputError("leading coefficient is zero");
}

ComplexPolynomial ComplexPolynomial::from_real(std::span<const double> coefficients) {
  return ComplexPolynomial(std::vector<Complex>(coefficients.begin(), coefficients.end()));
}

ComplexPolynomial ComplexPolynomial::from_roots(std::span<const Complex> rs) {
  std::vector<Complex> c{1.0};
  for (const auto& r : rs) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return ComplexPolynomial(std::move(c));
}

Complex ComplexPolynomial::operator()(Complex z) const {
  Complex s = 0.0;
  for (std::size_t k = c_.size(); k-- > 0;) s = s * z + c_[k];
  return s;
}

ComplexPolynomial derivative(const ComplexPolynomial& p) {
  if (p.degree() < 1) throw InputError("derivative of a constant polynomial");
  const auto& c = p.coefficients();
  std::vector<Complex> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];
  return ComplexPolynomial(std::move(d));
}

std::vector<Complex> roots(const ComplexPolynomial& p, const RootOptions& opts) {
  const std::size_t n = p.degree();
  if (n < 1) throw InputError("roots of a constant polynomial");
  std::vector<LComplex> c(p.coefficients().begin(), p.coefficients().end());
  if (n == 1) return {Complex(-p.coefficients()[0] / p.coefficients()[1])};

  const long double eps = std::numeric_limits<long double>::epsilon();
  auto eval = [&](LComplex z, LComplex& value, LComplex& slope, long double& bound) {
    value = c[n];
    slope = 0.0L;
    bound = std::abs(c[n]);
    const long double az = std::abs(z);
    for (std::size_t k = n; k-- > 0;) {
      slope = slope * z + value;
      value = value * z + c[k];
      bound = bound * az + std::abs(c[k]);
    }
  };

  const long double radius = cauchy_radius(c);
  const LComplex center = -c[n - 1] / (static_cast<long double>(n) * c[n]);
  const long double spread = std::max(radius - std::abs(center), radius * 0.5L);
  std::vector<LComplex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[k] = center + std::polar(spread, angle);
  }

  std::vector<bool> done(n, false);
  std::size_t converged = 0;
  for (std::size_t it = 0; it < opts.max_iterations && converged < n; ++it) {
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      LComplex value, slope;
      long double bound;
      eval(z[k], value, slope, bound);
      // Backward-stable stop: |P(z)| at rounding level of the evaluation.
      if (std::abs(value) <= 4.0L * n * eps * bound) {
        done[k] = true;
        ++converged;
        continue;
      }
      const LComplex ratio = value / slope;
      LComplex repulsion = 0.0L;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) repulsion += 1.0L / (z[k] - z[j]);
      const LComplex corr = ratio / (1.0L - ratio * repulsion);
      z[k] -= corr;
      if (std::abs(corr) <= opts.tol * std::max(1.0L, std::abs(z[k]))) {
        done[k] = true;
        ++converged;
      }
    }
  }
  if (converged < n) {
    std::ostringstream os;
    os << "Aberth iteration did not converge after " << opts.max_iterations << " iterations; best iterate:";
    for (const auto& r : z) os << " [" << describe(Complex(r)) << "]";
    throw ConvergenceError(os.str());
  }

  // Merge clusters (union-find on close pairs) into their means.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(z[i] - z[j]) <= opts.cluster_radius * std::max(1.0L, std::abs(z[i])))
        parent[find(i)] = find(j);
  std::vector<LComplex> sum(n, 0.0L);
  std::vector<std::size_t> count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    sum[find(i)] += z[i];
    ++count[find(i)];
  }
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    out[i] = count[r] > 1 ? Complex(sum[r] / static_cast<long double>(count[r])) : Complex(z[i]);
  }
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

bool gauss_lucas_check(const ComplexPolynomial& p, double tol) {
  if (p.degree() < 2) throw InputError("Gauss-Lucas check needs degree >= 2");
  std::vector<geometry::Point2> pts;
  for (const auto& r : roots(p)) pts.push_back({r.real(), r.imag()});
  const auto hull = geometry::convex_hull_2d(std::move(pts));
  for (const auto& m : roots(derivative(p)))
    if (geometry::distance_to_hull_2d(hull, {m.real(), m.imag()}) > tol) return false;
  return true;
}

namespace {
WeightedMeasure root_measure(const std::vector<Complex>& rs) {
  std::vector<Vector> pts;
  pts.reserve(rs.size());
  for (const auto& r : rs) pts.push_back({r.real(), r.imag()});
  return WeightedMeasure::uniform(std::move(pts));
}
}  // namespace

FeasibilityVerdict malamud_majorization_check(const ComplexPolynomial& p, double tol) {
  if (p.degree() < 2) throw InputError("Malamud check needs degree >= 2");
  return weighted_majorization_decide(root_measure(roots(derivative(p))), root_measure(roots(p)), tol);
}

Comparison debruijn_springer_verify(const ComplexPolynomial& p, const PlaneFunction& f, double tol) {
  if (p.degree() < 2) throw InputError("de Bruijn-Springer check needs degree >= 2");
  const auto lam = roots(p);
  const auto mu = roots(derivative(p));
  double lhs = 0.0, rhs = 0.0;
  for (const auto& m : mu) lhs += f(m);
  for (const auto& l : lam) rhs += f(l);
  return Comparison::less_equal(lhs / static_cast<double>(mu.size()), rhs / static_cast<double>(lam.size()), tol);
}

double gauss_concavity_radius() {
  static const double radius = [] {
    const auto crossing = convexity_boundary(functions::gauss1d(), 0.5, Direction::right, 1e-13);
    if (!crossing) throw ConvergenceError("tangent of exp(-t^2) at 1/2 never recrosses the graph");
    return crossing->point;
  }();
  return radius;
}

Comparison relative_concavity_verify(const ComplexPolynomial& p, double tol) {
  if (p.degree() < 2) throw InputError("relative concavity check needs degree >= 2");
  const double r_star = gauss_concavity_radius();
  const auto lam = roots(p);
  const auto mu = roots(derivative(p));
  for (const auto& m : mu)
    if (std::abs(m) > 0.5 + tol)
      throw HypothesisError("root " + describe(m) + " of P' lies outside the closed disc of radius 1/2");
  for (const auto& l : lam)
    if (std::abs(l) > r_star + tol) {
      std::ostringstream os;
      os.precision(10);
      os << "root " << describe(l) << " of P lies outside the closed disc of radius " << r_star;
      throw HypothesisError(os.str());
    }
  double lhs = 0.0, rhs = 0.0;
  for (const auto& m : mu) lhs += std::exp(-std::norm(m));
  for (const auto& l : lam) rhs += std::exp(-std::norm(l));
  return Comparison::greater_equal(lhs / static_cast<double>(mu.size()), rhs / static_cast<double>(lam.size()), tol);
}

}  // namespace relconvex
