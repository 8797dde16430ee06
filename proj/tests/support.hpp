#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "relconvex/matrix.hpp"

namespace testing {

using relconvex::Matrix;
using relconvex::Vector;

inline Vector random_vector(std::mt19937_64& rng, std::size_t n, double lo = -5.0, double hi = 5.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  Vector v(n);
  for (double& x : v) x = u(rng);
  return v;
}

// Sum of random permutation matrices with random convex weights.
inline Matrix random_doubly_stochastic(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.1, 1.0);
  Matrix d(n, n);
  std::vector<std::size_t> perm(n);
  double total = 0.0;
  std::vector<double> w(3);
  for (double& x : w) total += (x = u(rng));
  for (double x : w) {
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < n; ++i) d(i, perm[i]) += x / total;
  }
  return d;
}

// Reference partial-sum majorization test, written independently of the
// library routine.
inline bool majorized_reference(Vector x, Vector y, double tol) {
  std::sort(x.rbegin(), x.rend());
  std::sort(y.rbegin(), y.rend());
  double sx = 0.0, sy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
    if (k + 1 < x.size() && sx > sy + tol) return false;
  }
  return std::abs(sx - sy) <= tol;
}

}  // namespace testing
