#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>

#include "relconvex/comparison.hpp"
#include "relconvex/function.hpp"
#include "relconvex/measures.hpp"

namespace relconvex {

/// Whether Jensen's inequality is read forwards (point of convexity) or
/// reversed (point of concavity).
enum class Sense { convexity, concavity };

struct CertifyOptions {
  std::size_t grid_points = 4096;
  int refine_depth = 20;
  double tol = 1e-9;
  /// Unbounded regions are cut to [a - horizon, a + horizon].
  double horizon = 50.0;
  /// Open endpoints are pulled inward by this fraction of the span.
  double open_epsilon = 1e-12;
};

/// Affine h(t) = slope * t + offset touching f at the base point and lying
/// below f on every sampled point of the region.
struct SupportCertificate {
  double base_point;
  double slope;
  double offset;
  /// Region actually sampled (after truncation and clamping).
  Interval region;
  /// min (f - h) over the grid and refinement, and where it occurs.
  double min_margin;
  double argmin;
  std::size_t grid_points;
  int refine_depth;
  std::size_t evaluations;
  bool truncated;

  double support(double t) const { return slope * t + offset; }
};

/// A point where f dips below the candidate supporting line by more than tol.
struct Refutation {
  double witness;
  double margin;
  double slope;
};

using CertifyResult = std::variant<SupportCertificate, Refutation>;

/// Grid-plus-refinement search for a supporting line of f at a over V.
///
/// The slope is f'(a) when a derivative is available; otherwise the midpoint
/// of [max left secant slope, min right secant slope] over the grid. Every
/// grid cell whose endpoint margin is below 10 * tol or that brackets a sign
/// change is bisected refine_depth times toward its smaller margin.
/// Throws InputError if a is outside V or V is not inside the domain of f.
CertifyResult support_line_certify(const ScalarFunction& f, double a, const Interval& region,
                                   const CertifyOptions& opts = {});

enum class Direction { left, right };

struct Crossing {
  double point;
  /// |f(point) - h(point)| for the tangent h at a.
  double residual;
};

/// First point beyond a (in the given direction) where the tangent line of f
/// at a crosses the graph. Empty when no crossing exists within the horizon
/// or before the domain ends. Requires a derivative.
std::optional<Crossing> convexity_boundary(const ScalarFunction& f, double a, Direction dir, double tol = 1e-12,
                                           double horizon = 50.0);

/// f(a) <= E_mu f + tol (reversed for Sense::concavity).
/// Throws HypothesisError when the barycenter of mu is farther than tol from a.
Comparison jensen_at_point_verify(const ScalarFunction& f, double a, const WeightedMeasure& mu, double tol = 1e-9,
                                  Sense sense = Sense::convexity);

struct FalsifierOptions {
  std::size_t trials = 10000;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  std::size_t max_pairs = 3;
  double horizon = 50.0;
};

struct FalsifierResult {
  bool passed;
  std::size_t trials_run;
  /// First measure found violating Jensen's inequality at a.
  std::optional<WeightedMeasure> counterexample;
  double violation = 0.0;
};

/// Random search for a finite measure on V with barycenter a that violates
/// Jensen's inequality at a. Measures are two-point measures or mixtures of
/// up to max_pairs of them, with spreads drawn both uniformly and
/// log-uniformly near a.
FalsifierResult random_convexity_falsifier(const ScalarFunction& f, double a, const Interval& region,
                                           const FalsifierOptions& opts = {}, Sense sense = Sense::convexity);

/// Radial picture for w -> exp(-|w|^2) on the plane.
namespace radial {

/// T(w) - F(w) where T is the tangent plane of F = exp(-|w|^2) at w0.
/// Nonnegative means the plane lies above the graph at w.
double gauss_tangent_plane_margin(std::array<double, 2> w0, std::array<double, 2> w);

/// h(t) - g(t) where h is the tangent line of g = exp(-t^2) at r0.
double gauss_profile_margin(double r0, double t);

}  // namespace radial

}  // namespace relconvex
