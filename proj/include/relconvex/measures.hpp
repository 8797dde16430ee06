#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "relconvex/function.hpp"
#include "relconvex/matrix.hpp"

namespace relconvex {

/// Finite positive discrete measure sum_i w_i delta_{x_i} on R^d.
///
/// Weights are kept as given (not normalized); see normalize().
class WeightedMeasure {
 public:
  WeightedMeasure(std::size_t dimension, std::vector<Vector> points, Vector weights);

  /// Uniform weight 1/n on each point.
  static WeightedMeasure uniform(std::vector<Vector> points);
  /// One-dimensional convenience constructors.
  static WeightedMeasure on_line(const Vector& points, const Vector& weights);
  static WeightedMeasure uniform_on_line(const Vector& points);
  static WeightedMeasure dirac(Vector point, double mass = 1.0);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Vector>& points() const { return points_; }
  const Vector& weights() const { return weights_; }
  const Vector& point(std::size_t i) const { return points_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }
  double total_mass() const { return total_; }

 private:
  std::size_t dimension_;
  std::vector<Vector> points_;
  Vector weights_;
  double total_;
};

using VectorFunction = std::function<double(std::span<const double>)>;

/// (sum w_i x_i) / (sum w_i).
Vector barycenter(const WeightedMeasure& mu);

/// (sum w_i f(x_i)) / (sum w_i) for a one-dimensional measure.
/// A point outside the domain of f raises DomainError naming the point.
double expectation(const WeightedMeasure& mu, const ScalarFunction& f);

/// Same for a function on R^d; a non-finite value raises DomainError.
double expectation(const WeightedMeasure& mu, const VectorFunction& f);

WeightedMeasure normalize(const WeightedMeasure& mu);

/// Uniform weights 1/n on the samples.
WeightedMeasure empirical_from_samples(const std::vector<Vector>& samples);
WeightedMeasure empirical_from_samples(std::span<const double> samples);

}  // namespace relconvex
