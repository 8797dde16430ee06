#include "relconvex/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "relconvex/error.hpp"

namespace relconvex::oracle {

namespace {

void compositions(int total, std::size_t parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = 0; k <= total; ++k) {
    cur.push_back(k);
    compositions(total - k, parts - 1, cur, out);
    cur.pop_back();
  }
}

// Gaussian elimination with partial pivoting; empty when singular.
std::optional<Vector> solve_square(std::vector<Vector> a, Vector b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (std::abs(a[i][c]) > std::abs(a[p][c])) p = i;
    if (std::abs(a[p][c]) < 1e-12) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      const double f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  Vector x(n);
  for (std::size_t c = n; c-- > 0;) {
    double s = b[c];
    for (std::size_t j = c + 1; j < n; ++j) s -= a[c][j] * x[j];
    x[c] = s / a[c][c];
  }
  return x;
}

// Calls visit(subset) for every k-subset of {0, ..., n-1}.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

double exact_min_residual(const WeightedMeasure& mu_x, const WeightedMeasure& mu_y) {
  if (mu_x.dimension() != mu_y.dimension()) throw InputError("measures have different dimensions");
  const std::size_t m = mu_x.size(), n = mu_y.size(), d = mu_x.dimension();
  const std::size_t vars = m * n + 1;  // entries of A, then t
  const std::size_t t_col = m * n;

  // Residual rows r(u) = coef . u - target; both r <= t and -r <= t.
  std::vector<Vector> coef;
  Vector target;
  for (std::size_t j = 0; j < n; ++j) {
    Vector c(vars, 0.0);
    for (std::size_t i = 0; i < m; ++i) c[i * n + j] = mu_x.weight(i);
    coef.push_back(c);
    target.push_back(mu_y.weight(j));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      Vector c(vars, 0.0);
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] = mu_y.point(j)[k];
      coef.push_back(c);
      target.push_back(mu_x.point(i)[k]);
    }

  // Inequalities g . u <= h.
  std::vector<Vector> g;
  Vector h;
  for (std::size_t v = 0; v < m * n; ++v) {
    Vector row(vars, 0.0);
    row[v] = -1.0;
    g.push_back(row);
    h.push_back(0.0);
  }
  for (std::size_t r = 0; r < coef.size(); ++r) {
    for (double sign : {1.0, -1.0}) {
      Vector row(vars);
      for (std::size_t v = 0; v < vars; ++v) row[v] = sign * coef[r][v];
      row[t_col] = -1.0;
      g.push_back(row);
      h.push_back(sign * target[r]);
    }
  }
  // Equalities: unit row sums.
  std::vector<Vector> e;
  Vector eb;
  for (std::size_t i = 0; i < m; ++i) {
    Vector row(vars, 0.0);
    for (std::size_t j = 0; j < n; ++j) row[i * n + j] = 1.0;
    e.push_back(row);
    eb.push_back(1.0);
  }

  double best = std::numeric_limits<double>::infinity();
  for_each_subset(g.size(), vars - m, [&](const std::vector<std::size_t>& active) {
    std::vector<Vector> a = e;
    Vector b = eb;
    for (std::size_t k : active) {
      a.push_back(g[k]);
      b.push_back(h[k]);
    }
    const auto u = solve_square(std::move(a), std::move(b));
    if (!u) return;
    for (std::size_t k = 0; k < g.size(); ++k) {
      double lhs = 0.0;
      for (std::size_t v = 0; v < vars; ++v) lhs += g[k][v] * (*u)[v];
      if (lhs > h[k] + 1e-12) return;
    }
    best = std::min(best, std::max((*u)[t_col], 0.0));
  });
  return best;
}

GridSearchResult grid_search_row_stochastic(const WeightedMeasure& mu_x, const WeightedMeasure& mu_y, int resolution) {
  if (mu_x.dimension() != mu_y.dimension()) throw InputError("measures have different dimensions");
  if (resolution < 1) throw InputError("grid resolution must be positive");
  const std::size_t m = mu_x.size(), n = mu_y.size(), d = mu_x.dimension();
  const double step = 1.0 / resolution;

  std::vector<std::vector<int>> rows;
  std::vector<int> cur;
  compositions(resolution, n, cur, rows);

  // Barycentric residual of every candidate row against every x_i.
  std::vector<Vector> row_residual(m, Vector(rows.size()));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      double worst = 0.0;
      for (std::size_t c = 0; c < d; ++c) {
        double combo = 0.0;
        for (std::size_t j = 0; j < n; ++j) combo += rows[r][j] * step * mu_y.point(j)[c];
        worst = std::max(worst, std::abs(mu_x.point(i)[c] - combo));
      }
      row_residual[i][r] = worst;
    }
  }

  GridSearchResult best{std::numeric_limits<double>::infinity(), Matrix(m, n), 0};
  std::vector<std::size_t> pick(m, 0);
  Vector moved(n);
  // Odometer over m-tuples of row choices.
  while (true) {
    ++best.candidates;
    double worst = 0.0;
    for (std::size_t i = 0; i < m && worst < best.min_residual; ++i) worst = std::max(worst, row_residual[i][pick[i]]);
    if (worst < best.min_residual) {
      std::fill(moved.begin(), moved.end(), 0.0);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) moved[j] += rows[pick[i]][j] * step * mu_x.weight(i);
      for (std::size_t j = 0; j < n; ++j) worst = std::max(worst, std::abs(mu_y.weight(j) - moved[j]));
      if (worst < best.min_residual) {
        best.min_residual = worst;
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < n; ++j) best.best(i, j) = rows[pick[i]][j] * step;
      }
    }
    std::size_t k = 0;
    while (k < m && ++pick[k] == rows.size()) pick[k++] = 0;
    if (k == m) break;
  }
  return best;
}

}  // namespace relconvex::oracle
