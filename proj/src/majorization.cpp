#include "relconvex/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "relconvex/error.hpp"

namespace relconvex {

DoublyStochasticMatrix::DoublyStochasticMatrix(Matrix entries, double tol) : entries_(std::move(entries)) {
  if (!is_doubly_stochastic(entries_, tol)) throw InputError("matrix is not doubly stochastic");
}

std::vector<std::size_t> decreasing_order(std::span<const double> x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
  return idx;
}

Vector decreasing_rearrangement(std::span<const double> x) {
  if (x.empty()) throw InputError("decreasing_rearrangement of an empty vector");
  Vector out;
  out.reserve(x.size());
  for (std::size_t i : decreasing_order(x)) out.push_back(x[i]);
  return out;
}

bool is_majorized(std::span<const double> x, std::span<const double> y, double tol) {
  if (x.size() != y.size()) throw InputError("is_majorized: length mismatch");
  if (x.empty()) throw InputError("is_majorized: empty vectors");
  const Vector xs = decreasing_rearrangement(x);
  const Vector ys = decreasing_rearrangement(y);
  double sx = 0.0, sy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    if (k + 1 < xs.size() && sx > sy + tol) return false;
  }
  return std::abs(sx - sy) <= tol;
}

bool is_doubly_stochastic(const Matrix& a, double tol) {
  if (!a.square()) throw InputError("is_doubly_stochastic: matrix is not square");
  const std::size_t n = a.rows();
  Vector col(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double v = a(i, j);
      if (!(v >= -tol)) return false;
      row += v;
      col[j] += v;
    }
    if (std::abs(row - 1.0) > tol) return false;
  }
  for (double c : col)
    if (std::abs(c - 1.0) > tol) return false;
  return true;
}

TransferCertificate hlp_transfer_matrix(std::span<const double> x, std::span<const double> y, double tol) {
  if (!is_majorized(x, y, tol)) throw InputError("not majorized");
  const std::size_t n = x.size();
  const auto px = decreasing_order(x);
  const auto py = decreasing_order(y);
  Vector xs(n), z(n);
  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = x[px[i]];
    z[i] = y[py[i]];
    scale = std::max({scale, std::abs(xs[i]), std::abs(z[i])});
  }
  const double eps = 64.0 * std::numeric_limits<double>::epsilon() * scale;

  // Invariant: z = m * (y sorted), z stays decreasing and xs is majorized by z.
  Matrix m = Matrix::identity(n);
  std::size_t transforms = 0;
  for (std::size_t guard = 0; guard < n * n + n; ++guard) {
    std::size_t j = n;
    for (std::size_t i = n; i-- > 0;) {
      if (z[i] - xs[i] > eps) {
        j = i;
        break;
      }
    }
    if (j == n) break;
    std::size_t k = n;
    for (std::size_t i = j + 1; i < n; ++i) {
      if (xs[i] - z[i] > eps) {
        k = i;
        break;
      }
    }
    if (k == n) break;
    const double down = z[j] - xs[j];
    const double up = xs[k] - z[k];
    const double delta = std::min(down, up);
    const double t = delta / (z[j] - z[k]);
    for (std::size_t c = 0; c < n; ++c) {
      const double mj = m(j, c), mk = m(k, c);
      m(j, c) = (1.0 - t) * mj + t * mk;
      m(k, c) = t * mj + (1.0 - t) * mk;
    }
    z[j] = down <= up ? xs[j] : z[j] - delta;
    z[k] = up <= down ? xs[k] : z[k] + delta;
    ++transforms;
  }

  // Undo the sorting permutations: A[px[i]][py[l]] = m[i][l].
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) a(px[i], py[l]) = m(i, l);
  const Vector ay = a * y;
  const double residual = max_abs_diff(x, ay);
  return {DoublyStochasticMatrix(std::move(a), 1e-10), residual, transforms};
}

Comparison hlp_convex_sum_check(std::span<const double> x, std::span<const double> y, const ScalarFunction& f,
                                double tol) {
  double lhs = 0.0, rhs = 0.0;
  for (double v : x) lhs += f(v);
  for (double v : y) rhs += f(v);
  return Comparison::less_equal(lhs, rhs, tol);
}

}  // namespace relconvex
