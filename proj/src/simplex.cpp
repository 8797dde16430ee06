#include "relconvex/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "relconvex/error.hpp"

namespace relconvex::lp {

namespace {

// Solves B y = b for the basis columns of the original tableau by Gaussian
// elimination with partial pivoting. Empty when B is numerically singular.
std::optional<Vector> solve_basis(const Matrix& original, const std::vector<std::size_t>& basis, std::size_t rhs) {
  const std::size_t m = basis.size();
  Matrix b(m, m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) b(i, k) = original(i, basis[k]);
    b(i, m) = original(i, rhs);
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < m; ++i)
      if (std::abs(b(i, c)) > std::abs(b(p, c))) p = i;
    if (std::abs(b(p, c)) < 1e-13) return std::nullopt;
    if (p != c)
      for (std::size_t j = c; j <= m; ++j) std::swap(b(p, j), b(c, j));
    for (std::size_t i = c + 1; i < m; ++i) {
      const double f = b(i, c) / b(c, c);
      if (f == 0.0) continue;
      for (std::size_t j = c; j <= m; ++j) b(i, j) -= f * b(c, j);
    }
  }
  Vector y(m);
  for (std::size_t c = m; c-- > 0;) {
    double s = b(c, m);
    for (std::size_t j = c + 1; j < m; ++j) s -= b(c, j) * y[j];
    y[c] = s / b(c, c);
  }
  return y;
}

}  // namespace

PhaseOneResult phase_one(const Matrix& a, const Vector& b, const PhaseOneOptions& opts) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw InputError("phase_one: right-hand side length mismatch");

  // Columns: n structural, m artificial, then the right-hand side.
  const std::size_t width = n + m + 1;
  const std::size_t rhs = n + m;
  Matrix t(m, width);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = b[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = sign * a(i, j);
    t(i, n + i) = 1.0;
    t(i, rhs) = sign * b[i];
    basis[i] = n + i;
  }

  // Reduced costs of the phase-one objective (sum of artificials).
  Vector cost(width, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t(i, j);
  for (std::size_t i = 0; i < m; ++i) cost[rhs] -= t(i, rhs);

  const Matrix original = t;

  // Strict ratio test: minimum ratio, ties to the smallest basis index.
  auto bland_row = [&](std::size_t enter) {
    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      const double piv = t(i, enter);
      if (piv <= opts.pivot_tol) continue;
      const double ratio = t(i, rhs) / piv;
      const double slack = 1e-14 * std::max(1.0, best);
      if (leave == m || ratio < best - slack || (ratio <= best + slack && basis[i] < basis[leave])) {
        best = std::min(best, ratio);
        leave = i;
      }
    }
    return leave;
  };
  // Harris: bound the step with relaxed ratios, then take the largest pivot.
  auto harris_row = [&](std::size_t enter) {
    double theta = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      const double piv = t(i, enter);
      if (piv > opts.pivot_tol) theta = std::min(theta, (t(i, rhs) + opts.feasibility_tol) / piv);
    }
    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      const double piv = t(i, enter);
      if (piv <= opts.pivot_tol || t(i, rhs) / piv > theta) continue;
      if (leave == m || piv > t(leave, enter) || (piv == t(leave, enter) && basis[i] < basis[leave])) leave = i;
    }
    return leave;
  };

  PhaseOneResult result;
  std::vector<char> blocked(n + m, 0);
  std::size_t stalled = 0;
  while (true) {
    if (result.iterations >= opts.max_iterations) {
      result.status = PhaseOneStatus::iteration_limit;
      break;
    }
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs; ++j) {
      if (!blocked[j] && cost[j] < -opts.pivot_tol) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    const std::size_t leave = stalled >= opts.max_degenerate ? bland_row(enter) : harris_row(enter);
    // Phase one is bounded below by zero, so a column without a usable pivot
    // only has noise in its reduced cost. Skip it until the basis changes.
    if (leave == m) {
      blocked[enter] = 1;
      continue;
    }

    const double before = cost[rhs];
    const double piv = t(leave, enter);
    for (std::size_t j = 0; j < width; ++j) t(leave, j) /= piv;
    t(leave, enter) = 1.0;
    t(leave, rhs) = std::max(t(leave, rhs), 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double factor = t(i, enter);
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) t(i, j) -= factor * t(leave, j);
      t(i, enter) = 0.0;
      t(i, rhs) = std::max(t(i, rhs), 0.0);
    }
    const double cf = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= cf * t(leave, j);
    cost[enter] = 0.0;
    basis[leave] = enter;
    std::fill(blocked.begin(), blocked.end(), 0);
    // cost[rhs] is minus the objective, so progress makes it grow.
    stalled = cost[rhs] > before + 1e-15 * std::max(1.0, std::abs(before)) ? 0 : stalled + 1;
    ++result.iterations;
  }

  // Two readings of the final basis: the tableau levels, and a fresh solve
  // against the original rows. Keep whichever leaves the smaller residual;
  // the phase-one objective is that residual (the artificial total).
  auto extract = [&](const Vector& level) {
    Vector x(n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) x[basis[i]] = std::max(level[i], 0.0);
    double infeasibility = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double row = original(i, rhs);
      for (std::size_t j = 0; j < n; ++j) row -= original(i, j) * x[j];
      infeasibility += std::abs(row);
    }
    return std::pair{std::move(x), infeasibility};
  };
  Vector level(m);
  for (std::size_t i = 0; i < m; ++i) level[i] = t(i, rhs);
  auto best = extract(level);
  if (auto solved = solve_basis(original, basis, rhs)) {
    auto alt = extract(*solved);
    if (alt.second < best.second) best = std::move(alt);
  }
  result.x = std::move(best.first);
  result.objective = best.second;
  return result;
}

}  // namespace relconvex::lp
