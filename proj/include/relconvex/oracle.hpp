#pragma once

#include <cstddef>

#include "relconvex/matrix.hpp"
#include "relconvex/measures.hpp"

namespace relconvex::oracle {

struct GridSearchResult {
  /// Smallest max-residual of the mass-transfer and barycentric conditions
  /// over all grid matrices.
  double min_residual;
  Matrix best;
  std::size_t candidates;
};

/// Exhaustive search over row-stochastic matrices whose entries are
/// multiples of 1/resolution. Row sums and nonnegativity hold exactly on the
/// grid, so only the remaining two conditions contribute to the residual.
/// Shares no code with the simplex route; intended for m * n <= 4.
GridSearchResult grid_search_row_stochastic(const WeightedMeasure& mu_x, const WeightedMeasure& mu_y,
                                            int resolution = 200);

/// Exact value of min over row-stochastic A of the same max-residual, by
/// enumerating the vertices of the epigraph LP (solving each candidate
/// vertex system directly). Zero iff the pair is in weighted majorization.
/// Exponential in m * n; intended for m * n <= 4.
double exact_min_residual(const WeightedMeasure& mu_x, const WeightedMeasure& mu_y);

}  // namespace relconvex::oracle
