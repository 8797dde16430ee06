#include "relconvex/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "relconvex/error.hpp"

namespace relconvex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

struct Sampled {
  double lo;
  double hi;
  bool truncated;
};

// Bounded, closed sampling window for V, with open ends pulled inward.
Sampled sampling_window(const ScalarFunction& f, double a, const Interval& v, double horizon, double open_eps) {
  const Interval& dom = f.domain();
  if (!v.contains(a)) throw InputError("base point " + num(a) + " is outside the region " + v.to_string());
  if (!dom.contains(a)) throw InputError("base point " + num(a) + " is outside the domain of '" + f.name() + "'");
  if (v.lo < dom.lo || v.hi > dom.hi)
    throw InputError("region " + v.to_string() + " is not inside the domain " + dom.to_string());

  Sampled s{v.lo, v.hi, false};
  bool lo_open = v.lo_open || (v.lo == dom.lo && dom.lo_open);
  bool hi_open = v.hi_open || (v.hi == dom.hi && dom.hi_open);
  if (!std::isfinite(s.lo)) {
    s.lo = a - horizon;
    s.truncated = true;
    lo_open = false;
  }
  if (!std::isfinite(s.hi)) {
    s.hi = a + horizon;
    s.truncated = true;
    hi_open = false;
  }
  const double span = s.hi - s.lo;
  if (lo_open) s.lo += open_eps * span;
  if (hi_open) s.hi -= open_eps * span;
  return s;
}

double finite_or_inf(double v, double t, const ScalarFunction& f) {
  if (std::isnan(v)) throw DomainError("'" + f.name() + "' is NaN at " + num(t));
  return v;
}

}  // namespace

CertifyResult support_line_certify(const ScalarFunction& f, double a, const Interval& region,
                                   const CertifyOptions& opts) {
  if (opts.grid_points < 2) throw InputError("certification grid needs at least two points");
  const Sampled win = sampling_window(f, a, region, opts.horizon, opts.open_epsilon);
  const double lo = std::min(win.lo, a), hi = std::max(win.hi, a);
  const double fa = f(a);
  const std::size_t g = opts.grid_points;
  const double step = (hi - lo) / static_cast<double>(g - 1);

  Vector ts(g), fs(g);
  for (std::size_t k = 0; k < g; ++k) {
    ts[k] = k + 1 == g ? hi : lo + step * static_cast<double>(k);
    fs[k] = finite_or_inf(f.raw(ts[k]), ts[k], f);
  }
  std::size_t evaluations = g + 1;

  double slope;
  if (f.has_derivative()) {
    slope = f.derivative(a);
  } else {
    double left = -kInf, right = kInf;
    for (std::size_t k = 0; k < g; ++k) {
      const double dt = ts[k] - a;
      if (dt == 0.0 || !std::isfinite(fs[k])) continue;
      const double secant = (fs[k] - fa) / dt;
      if (dt < 0.0)
        left = std::max(left, secant);
      else
        right = std::min(right, secant);
    }
    if (std::isfinite(left) && std::isfinite(right))
      slope = 0.5 * (left + right);
    else if (std::isfinite(left))
      slope = left;
    else if (std::isfinite(right))
      slope = right;
    else
      slope = 0.0;
  }

  auto margin_at = [&](double t, double ft) { return ft - fa - slope * (t - a); };
  Vector ms(g);
  double best = kInf, argmin = a;
  for (std::size_t k = 0; k < g; ++k) {
    ms[k] = margin_at(ts[k], fs[k]);
    if (ms[k] < best) {
      best = ms[k];
      argmin = ts[k];
    }
  }
  if (0.0 < best) {
    best = 0.0;
    argmin = a;
  }

  const double flag = 10.0 * opts.tol;
  for (std::size_t k = 0; k + 1 < g; ++k) {
    const bool sign_change = (ms[k] < 0.0) != (ms[k + 1] < 0.0);
    if (!sign_change && std::min(ms[k], ms[k + 1]) >= flag) continue;
    double l = ts[k], r = ts[k + 1], ml = ms[k], mr = ms[k + 1];
    for (int depth = 0; depth < opts.refine_depth; ++depth) {
      const double mid = 0.5 * (l + r);
      const double mm = margin_at(mid, finite_or_inf(f.raw(mid), mid, f));
      ++evaluations;
      if (mm < best) {
        best = mm;
        argmin = mid;
      }
      // Follow the half holding the smaller endpoint margin.
      if (ml <= mr) {
        r = mid;
        mr = mm;
      } else {
        l = mid;
        ml = mm;
      }
    }
  }

  if (best < -opts.tol) return Refutation{argmin, best, slope};
  return SupportCertificate{a,
                            slope,
                            fa - slope * a,
                            Interval::closed(lo, hi),
                            best,
                            argmin,
                            g,
                            opts.refine_depth,
                            evaluations,
                            win.truncated};
}

std::optional<Crossing> convexity_boundary(const ScalarFunction& f, double a, Direction dir, double tol,
                                           double horizon) {
  if (!f.has_derivative()) throw InputError("convexity_boundary needs a derivative for '" + f.name() + "'");
  const Interval& dom = f.domain();
  if (!dom.interior(a)) throw InputError("base point " + num(a) + " is not interior to the domain");

  const double fa = f(a);
  const double slope = f.derivative(a);
  const double sgn = dir == Direction::right ? 1.0 : -1.0;
  auto gap = [&](double t) { return f.raw(t) - fa - slope * (t - a); };

  double limit = a + sgn * horizon;
  if (dir == Direction::right && limit >= dom.hi) limit = dom.hi - 1e-12 * std::max(1.0, std::abs(dom.hi));
  if (dir == Direction::left && limit <= dom.lo) limit = dom.lo + 1e-12 * std::max(1.0, std::abs(dom.lo));

  constexpr int kSteps = 1 << 16;
  const double step = horizon / kSteps;
  auto noise = [&](double t) {
    return 64.0 * std::numeric_limits<double>::epsilon() *
           (std::abs(f.raw(t)) + std::abs(fa) + std::abs(slope * (t - a)) + 1.0);
  };

  double ref = 0.0;
  double prev = a;
  double cross = std::numeric_limits<double>::quiet_NaN();
  for (int k = 1; k <= kSteps; ++k) {
    double t = a + sgn * step * k;
    if (sgn * (t - limit) > 0.0) t = limit;
    const double v = gap(t);
    if (std::isnan(v)) break;
    if (std::abs(v) > noise(t)) {
      const double s = v > 0.0 ? 1.0 : -1.0;
      if (ref == 0.0) {
        ref = s;
      } else if (s != ref) {
        cross = t;
        break;
      }
    }
    if (ref != 0.0) prev = t;
    if (t == limit) break;
  }
  if (std::isnan(cross)) return std::nullopt;

  // Bisection on [prev, cross], then Newton polish.
  double lo = prev, hi = cross;
  for (int it = 0; it < 200 && std::abs(hi - lo) > 4.0 * std::numeric_limits<double>::epsilon() * std::abs(hi);
       ++it) {
    const double mid = 0.5 * (lo + hi);
    const double v = gap(mid);
    if (v * ref > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double b = 0.5 * (lo + hi);
  double gb = gap(b);
  for (int it = 0; it < 8; ++it) {
    const double d = f.derivative(b) - slope;
    if (d == 0.0) break;
    const double next = b - gb / d;
    const double gn = gap(next);
    if (!(std::abs(gn) < std::abs(gb))) break;
    b = next;
    gb = gn;
  }
  if (std::abs(gb) > tol)
    throw ConvergenceError("boundary search stalled at " + num(b) + " with residual " + num(std::abs(gb)));
  return Crossing{b, std::abs(gb)};
}

Comparison jensen_at_point_verify(const ScalarFunction& f, double a, const WeightedMeasure& mu, double tol,
                                  Sense sense) {
  if (mu.dimension() != 1) throw InputError("jensen_at_point_verify needs a one-dimensional measure");
  const double b = barycenter(mu)[0];
  if (std::abs(b - a) > tol)
    throw HypothesisError("barycenter " + num(b) + " of the measure differs from the point " + num(a));
  const double fa = f(a);
  const double mean = expectation(mu, f);
  return sense == Sense::convexity ? Comparison::less_equal(fa, mean, tol) : Comparison::greater_equal(fa, mean, tol);
}

FalsifierResult random_convexity_falsifier(const ScalarFunction& f, double a, const Interval& region,
                                           const FalsifierOptions& opts, Sense sense) {
  const Sampled win = sampling_window(f, a, region, opts.horizon, 1e-12);
  FalsifierResult result{true, 0, std::nullopt, 0.0};
  if (!(win.lo < a && a < win.hi)) return result;

  const double fa = f(a);
  const double sign = sense == Sense::convexity ? 1.0 : -1.0;
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t pairs_max = std::max<std::size_t>(1, opts.max_pairs);

  for (std::size_t trial = 0; trial < opts.trials; ++trial) {
    result.trials_run = trial + 1;
    const std::size_t pairs = 1 + static_cast<std::size_t>(unit(rng) * pairs_max) % pairs_max;
    Vector pts, wts;
    double mix_total = 0.0;
    Vector mix(pairs);
    for (double& m : mix) {
      m = 0.05 + unit(rng);
      mix_total += m;
    }
    for (std::size_t p = 0; p < pairs; ++p) {
      double u, v;
      if (unit(rng) < 0.5) {
        u = a - (a - win.lo) * (1.0 - unit(rng));
        v = a + (win.hi - a) * (1.0 - unit(rng));
      } else {
        u = a - (a - win.lo) * std::pow(10.0, -6.0 * unit(rng));
        v = a + (win.hi - a) * std::pow(10.0, -6.0 * unit(rng));
      }
      if (!(u < a && a < v)) continue;
      const double w = mix[p] / mix_total;
      pts.push_back(u);
      wts.push_back(w * (v - a) / (v - u));
      pts.push_back(v);
      wts.push_back(w * (a - u) / (v - u));
    }
    if (pts.empty()) continue;
    double mean = 0.0, total = 0.0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const double fv = f.raw(pts[k]);
      if (!std::isfinite(fv)) {
        total = -1.0;
        break;
      }
      mean += wts[k] * fv;
      total += wts[k];
    }
    if (total <= 0.0) continue;
    mean /= total;
    const double violation = sign * (fa - mean);
    if (violation > opts.tol) {
      result.passed = false;
      result.violation = violation;
      result.counterexample = WeightedMeasure::on_line(pts, wts);
      return result;
    }
  }
  return result;
}

namespace radial {

double gauss_tangent_plane_margin(std::array<double, 2> w0, std::array<double, 2> w) {
  const double f0 = std::exp(-(w0[0] * w0[0] + w0[1] * w0[1]));
  const double tangent = f0 - 2.0 * f0 * (w0[0] * (w[0] - w0[0]) + w0[1] * (w[1] - w0[1]));
  return tangent - std::exp(-(w[0] * w[0] + w[1] * w[1]));
}

double gauss_profile_margin(double r0, double t) {
  const double g0 = std::exp(-r0 * r0);
  const double tangent = g0 - 2.0 * r0 * g0 * (t - r0);
  return tangent - std::exp(-t * t);
}

}  // namespace radial

}  // namespace relconvex
