#include "relconvex/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "relconvex/error.hpp"

namespace relconvex {

namespace {
std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}
}  // namespace

SexticWitness popoviciu_witness(double a, double b, double c) {
  std::array<double, 3> s{a, b, c};
  std::sort(s.begin(), s.end(), std::greater<>());
  const auto [hi, mid, lo] = s;
  const double mean = (hi + mid + lo) / 3.0;
  const double ab = (hi + mid) / 2.0, ac = (hi + lo) / 2.0, bc = (mid + lo) / 2.0;

  SexticWitness w;
  w.x = {ab, ab, ac, ac, bc, bc};
  if (mean >= mid) {
    w.y = {hi, mean, mean, mean, mid, lo};
    w.which = SexticWitness::Case::mean_above_middle;
  } else {
    w.y = {hi, mid, mean, mean, mean, lo};
    w.which = SexticWitness::Case::mean_below_middle;
  }
  return w;
}

Comparison popoviciu_verify(const ScalarFunction& f, double a, double b, double c, double tol) {
  const double lhs = (f(a) + f(b) + f(c)) / 3.0 + f((a + b + c) / 3.0);
  const double rhs = 2.0 / 3.0 * (f((a + b) / 2.0) + f((a + c) / 2.0) + f((b + c) / 2.0));
  return Comparison::greater_equal(lhs, rhs, tol);
}

Comparison xexp_weighted_jensen_verify(std::span<const double> lambdas, std::span<const double> xs, double tol) {
  if (lambdas.size() != xs.size() || xs.empty()) throw InputError("weights and points must be nonempty and match");
  double total = 0.0, mean = 0.0, lhs = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (!(lambdas[k] > 0.0)) throw InputError("weight " + std::to_string(k) + " is not positive");
    total += lambdas[k];
    mean += lambdas[k] * xs[k];
    lhs += lambdas[k] * xs[k] * std::exp(xs[k]);
  }
  if (std::abs(total - 1.0) > tol) throw InputError("weights sum to " + num(total) + ", not 1");
  if (mean < -1.0 - tol) throw HypothesisError("outside certified region: weighted mean " + num(mean) + " < -1");
  return Comparison::greater_equal(lhs, mean * std::exp(mean), tol);
}

double borwein_girgensohn_constant(std::size_t n) {
  if (n == 0) throw InputError("empty family");
  const double nn = static_cast<double>(n);
  return std::max(2.0, std::numbers::e * (1.0 - 1.0 / nn)) / nn;
}

Comparison borwein_girgensohn_verify(std::span<const double> xs, double tol) {
  if (xs.empty()) throw InputError("empty family");
  double sum = 0.0, lhs = 0.0, squares = 0.0;
  for (double x : xs) {
    sum += x;
    lhs += x * std::exp(x);
    squares += x * x;
  }
  if (sum < -tol) throw HypothesisError("hypothesis violated: sum " + num(sum) + " is negative");
  return Comparison::greater_equal(lhs, borwein_girgensohn_constant(xs.size()) * squares, tol);
}

std::array<double, 3> elementary_symmetric(const std::array<double, 3>& v) {
  return {v[0] + v[1] + v[2], v[0] * v[1] + v[1] * v[2] + v[2] * v[0], v[0] * v[1] * v[2]};
}

Comparison bnl_triplet_verify(const std::array<double, 3>& x, const std::array<double, 3>& y, double tol) {
  for (int i = 0; i < 3; ++i) {
    if (!(x[i] > 0.0)) throw HypothesisError("positivity fails: x" + std::to_string(i + 1) + " = " + num(x[i]));
    if (!(y[i] > 0.0)) throw HypothesisError("positivity fails: y" + std::to_string(i + 1) + " = " + num(y[i]));
  }
  const auto ex = elementary_symmetric(x);
  const auto ey = elementary_symmetric(y);
  if (ex[0] > ey[0] + tol) throw HypothesisError("e1 condition fails: " + num(ex[0]) + " > " + num(ey[0]));
  if (ex[1] > ey[1] + tol) throw HypothesisError("e2 condition fails: " + num(ex[1]) + " > " + num(ey[1]));
  if (std::abs(ex[2] - ey[2]) > tol) throw HypothesisError("e3 condition fails: " + num(ex[2]) + " != " + num(ey[2]));
  double lhs = 0.0, rhs = 0.0;
  for (int i = 0; i < 3; ++i) {
    lhs += std::log(x[i]) * std::log(x[i]);
    rhs += std::log(y[i]) * std::log(y[i]);
  }
  return Comparison::less_equal(lhs, rhs, tol);
}

ProbabilisticJensenReport probabilistic_jensen_verify(const WeightedMeasure& dist, const ScalarFunction& f,
                                                      std::optional<double> truncation_level, double tol) {
  if (dist.dimension() != 1) throw InputError("probabilistic Jensen needs a real-valued random variable");
  Vector pts, wts = dist.weights();
  pts.reserve(dist.size());
  for (const auto& p : dist.points()) {
    double v = p[0];
    if (truncation_level) {
      if (!(*truncation_level > 0.0)) throw InputError("truncation level must be positive");
      v = std::clamp(v, -*truncation_level, *truncation_level);
    }
    pts.push_back(v);
  }
  WeightedMeasure support = WeightedMeasure::on_line(pts, wts);
  const double mean = barycenter(support)[0];
  const double mean_of_f = expectation(support, f);
  const double f_of_mean = f(mean);
  const bool holds = f_of_mean <= mean_of_f + tol;
  return {mean, f_of_mean, mean_of_f, holds, std::move(support)};
}

ProbabilisticJensenReport probabilistic_jensen_verify(std::span<const double> samples, const ScalarFunction& f,
                                                      std::optional<double> truncation_level, double tol) {
  return probabilistic_jensen_verify(empirical_from_samples(samples), f, truncation_level, tol);
}

}  // namespace relconvex
