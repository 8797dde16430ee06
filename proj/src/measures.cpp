#include "relconvex/measures.hpp"

#include <cmath>
#include <sstream>

#include "relconvex/error.hpp"

namespace relconvex {

namespace {
std::string describe(std::span<const double> p) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  os << ')';
  return os.str();
}
}  // namespace

WeightedMeasure::WeightedMeasure(std::size_t dimension, std::vector<Vector> points, Vector weights)
    : dimension_(dimension), points_(std::move(points)), weights_(std::move(weights)), total_(0.0) {
  if (dimension_ == 0) throw InputError("measure dimension must be positive");
  if (points_.empty()) throw InputError("measure needs at least one point");
  if (points_.size() != weights_.size()) throw InputError("measure has different numbers of points and weights");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != dimension_)
      throw InputError("measure point " + std::to_string(i) + " has wrong dimension");
    for (double c : points_[i])
      if (!std::isfinite(c)) throw InputError("measure point " + std::to_string(i) + " is not finite");
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i]))
      throw InputError("measure weight " + std::to_string(i) + " must be finite and > 0");
    total_ += weights_[i];
  }
  if (!std::isfinite(total_)) throw InputError("measure total mass is not finite");
}

WeightedMeasure WeightedMeasure::uniform(std::vector<Vector> points) {
  if (points.empty()) throw InputError("measure needs at least one point");
  const std::size_t d = points.front().size();
  Vector w(points.size(), 1.0 / static_cast<double>(points.size()));
  return {d, std::move(points), std::move(w)};
}

WeightedMeasure WeightedMeasure::on_line(const Vector& points, const Vector& weights) {
  std::vector<Vector> pts;
  pts.reserve(points.size());
  for (double p : points) pts.push_back({p});
  return {1, std::move(pts), weights};
}

WeightedMeasure WeightedMeasure::uniform_on_line(const Vector& points) {
  std::vector<Vector> pts;
  pts.reserve(points.size());
  for (double p : points) pts.push_back({p});
  return uniform(std::move(pts));
}

WeightedMeasure WeightedMeasure::dirac(Vector point, double mass) {
  const std::size_t d = point.size();
  return {d, {std::move(point)}, {mass}};
}

Vector barycenter(const WeightedMeasure& mu) {
  Vector b(mu.dimension(), 0.0);
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t c = 0; c < mu.dimension(); ++c) b[c] += mu.weight(i) * mu.point(i)[c];
  for (double& v : b) v /= mu.total_mass();
  return b;
}

double expectation(const WeightedMeasure& mu, const ScalarFunction& f) {
  if (mu.dimension() != 1) throw InputError("scalar expectation needs a one-dimensional measure");
  double s = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const double x = mu.point(i)[0];
    if (!f.domain().contains(x))
      throw DomainError("measure point " + describe(mu.point(i)) + " lies outside the domain " +
                        f.domain().to_string() + " of '" + f.name() + "'");
    s += mu.weight(i) * f(x);
  }
  return s / mu.total_mass();
}

double expectation(const WeightedMeasure& mu, const VectorFunction& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const double v = f(mu.point(i));
    if (!std::isfinite(v)) throw DomainError("function is not finite at measure point " + describe(mu.point(i)));
    s += mu.weight(i) * v;
  }
  return s / mu.total_mass();
}

WeightedMeasure normalize(const WeightedMeasure& mu) {
  Vector w = mu.weights();
  for (double& v : w) v /= mu.total_mass();
  return {mu.dimension(), mu.points(), std::move(w)};
}

WeightedMeasure empirical_from_samples(const std::vector<Vector>& samples) {
  if (samples.empty()) throw InputError("empirical measure needs at least one sample");
  const std::size_t d = samples.front().size();
  for (const auto& s : samples)
    if (s.size() != d) throw InputError("samples have mixed dimension");
  return WeightedMeasure::uniform(samples);
}

WeightedMeasure empirical_from_samples(std::span<const double> samples) {
  if (samples.empty()) throw InputError("empirical measure needs at least one sample");
  return WeightedMeasure::uniform_on_line(Vector(samples.begin(), samples.end()));
}

}  // namespace relconvex
