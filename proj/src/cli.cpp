#include "relconvex/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <variant>

#include "CLI11.hpp"
#include "relconvex/convexity.hpp"
#include "relconvex/error.hpp"
#include "relconvex/inequalities.hpp"
#include "relconvex/io.hpp"
#include "relconvex/majorization.hpp"
#include "relconvex/polyroots.hpp"
#include "relconvex/report.hpp"
#include "relconvex/reproduce.hpp"
#include "relconvex/spectra.hpp"
#include "relconvex/transport.hpp"

namespace relconvex::cli {

using nlohmann::json;

namespace {

constexpr double kDefaultTol = 1e-9;

double default_tolerance() {
  const char* env = std::getenv("RELCONVEX_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTol;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
    throw InputError(std::string("RELCONVEX_TOL must be a positive number, got '") + env + "'");
  return v;
}

struct Common {
  bool json = false;
  double tol = kDefaultTol;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json, "Print the report as JSON");
  sub->add_option("--tol", c.tol, "Tolerance (default 1e-9, or RELCONVEX_TOL)")->check(CLI::PositiveNumber);
}

std::array<double, 3> triple(const std::string& arg) {
  const Vector v = io::load_vector(arg);
  if (v.size() != 3) throw InputError("expected three numbers, got '" + arg + "'");
  return {v[0], v[1], v[2]};
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

// "lo,hi" with optional bracket notation; ends that coincide with an open
// end of the domain inherit its openness.
Interval region_for(const ScalarFunction& f, const std::string& text) {
  if (text.empty()) return f.domain();
  std::string s = trim(text);
  bool lo_open = false, hi_open = false;
  if (!s.empty() && (s.front() == '(' || s.front() == '[')) {
    lo_open = s.front() == '(';
    s.erase(0, 1);
  }
  if (!s.empty() && (s.back() == ')' || s.back() == ']')) {
    hi_open = s.back() == ')';
    s.pop_back();
  }
  const Vector v = io::parse_number_list(s);
  if (v.size() != 2) throw InputError("region must be 'lo,hi', got '" + text + "'");
  const Interval& dom = f.domain();
  if (v[0] == dom.lo && dom.lo_open) lo_open = true;
  if (v[1] == dom.hi && dom.hi_open) hi_open = true;
  return Interval(v[0], v[1], lo_open, hi_open);
}

json comparison_json(const Comparison& c) {
  return {{"lhs", c.lhs}, {"rhs", c.rhs}, {"slack", c.slack}};
}

std::string truth(bool b) { return b ? "true" : "false"; }

PlaneFunction plane_function(const std::string& name) {
  if (name == "abs2") return [](Complex z) { return std::norm(z); };
  if (name == "abs") return [](Complex z) { return std::abs(z); };
  if (name == "re") return [](Complex z) { return z.real(); };
  if (name == "absre") return [](Complex z) { return std::abs(z.real()); };
  if (name == "posre") return [](Complex z) { return std::max(z.real(), 0.0); };
  throw InputError("unknown plane function '" + name + "' (expected abs2, abs, re, absre or posre)");
}

json residuals_json(const TransportResiduals& r) {
  return {{"negativity", r.negativity},
          {"row_sum", r.row_sum},
          {"mass_transfer", r.mass_transfer},
          {"barycenter", r.barycenter}};
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << j.dump(2) << '\n';
}

int exit_code_for(const std::string& verdict) {
  static const std::set<std::string> negative{"false", "infeasible", "refuted", "fail"};
  return negative.count(verdict) ? kFalse : kTrue;
}

void print_text(const RunReport& r, std::ostream& out) {
  if (r.subcommand == "reproduce") {
    for (const auto& e : r.value.at("entries")) {
      out << (e.at("pass").get<bool>() ? "PASS  " : "FAIL  ") << e.at("id").get<std::string>() << "  "
          << e.at("computed").dump() << '\n';
      if (!e.at("pass").get<bool>()) out << "      expected " << e.at("expected").dump() << '\n';
    }
    out << r.value.at("passed").get<int>() << " passed, " << r.value.at("failed").get<int>() << " failed\n";
    return;
  }
  if (!r.verdict.empty()) out << r.verdict << '\n';
  if (r.value.is_object()) {
    for (const auto& [k, v] : r.value.items()) out << k << ": " << v.dump() << '\n';
  } else if (!r.value.is_null()) {
    out << r.value.dump() << '\n';
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Common common;
  try {
    common.tol = default_tolerance();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  CLI::App app{"Relative convexity toolkit: majorization, transport certificates, points of convexity"};
  app.name("relconvex");
  app.require_subcommand(1);

  std::function<RunReport()> action;
  RunReport report;

  // majorize
  std::string maj_x, maj_y;
  bool maj_witness = false;
  auto* majorize = app.add_subcommand("majorize", "Decide x majorized by y (equal-length vectors)");
  majorize->add_option("--x", maj_x, "Vector: JSON file or comma-separated list")->required();
  majorize->add_option("--y", maj_y, "Vector: JSON file or comma-separated list")->required();
  majorize->add_flag("--witness", maj_witness, "Print a doubly stochastic A with x = A y");
  add_common(majorize, common);
  majorize->callback([&] {
    action = [&] {
      const Vector x = io::load_vector(maj_x), y = io::load_vector(maj_y);
      if (x.size() != y.size()) throw InputError("x and y have different lengths");
      RunReport r;
      r.subcommand = "majorize";
      r.inputs = {{"x", x}, {"y", y}, {"witness", maj_witness}};
      const bool holds = is_majorized(x, y, common.tol);
      r.verdict = truth(holds);
      r.value = {{"x_sorted", decreasing_rearrangement(x)}, {"y_sorted", decreasing_rearrangement(y)}};
      if (holds && maj_witness) {
        const auto cert = hlp_transfer_matrix(x, y, common.tol);
        r.value["witness"] = io::matrix_to_json(cert.matrix.entries());
        r.value["transforms"] = cert.transforms;
        r.residuals["x_minus_Ay"] = cert.residual;
      }
      return r;
    };
  });

  // transport
  std::string tr_x, tr_y, tr_witness;
  auto* transport = app.add_subcommand("transport", "Decide weighted majorization between two discrete measures");
  transport->add_option("--x", tr_x, "Source measure: JSON file, 'p1,p2,...' or 'p1,...;w1,...'")->required();
  transport->add_option("--y", tr_y, "Target measure, same formats")->required();
  transport->add_option("--witness", tr_witness, "Write the row-stochastic certificate to this JSON file");
  add_common(transport, common);
  transport->callback([&] {
    action = [&] {
      const auto mx = io::load_measure(tr_x), my = io::load_measure(tr_y);
      RunReport r;
      r.subcommand = "transport";
      r.inputs = {{"x", io::measure_to_json(mx)}, {"y", io::measure_to_json(my)}};
      const auto verdict = weighted_majorization_decide(mx, my, common.tol);
      r.verdict = verdict ? "feasible" : "infeasible";
      r.value = {{"phase1_objective", verdict.phase1_objective()}};
      if (verdict) {
        const auto& cert = verdict.certificate();
        r.value["certificate"] = io::matrix_to_json(cert.entries);
        r.residuals = residuals_json(cert.residuals);
        if (!tr_witness.empty()) write_json_file(tr_witness, io::matrix_to_json(cert.entries));
      }
      return r;
    };
  });

  // certify
  std::string cert_fn, cert_region;
  double cert_at = 0.0;
  CertifyOptions cert_opts;
  auto* certify = app.add_subcommand("certify", "Search for a supporting line of f at a over a region");
  certify->add_option("--fn", cert_fn, "Built-in name or expression in t")->required();
  certify->add_option("--at", cert_at, "Base point a")->required();
  certify->add_option("--region", cert_region, "Region 'lo,hi' (brackets allowed; default: domain of f)");
  certify->add_option("--grid", cert_opts.grid_points, "Grid points")->capture_default_str();
  certify->add_option("--depth", cert_opts.refine_depth, "Refinement depth")->capture_default_str();
  certify->add_option("--horizon", cert_opts.horizon, "Truncation radius for unbounded regions")
      ->capture_default_str();
  add_common(certify, common);
  certify->callback([&] {
    action = [&] {
      const auto f = functions::resolve(cert_fn);
      const Interval v = region_for(f, cert_region);
      cert_opts.tol = common.tol;
      RunReport r;
      r.subcommand = "certify";
      r.inputs = {{"fn", cert_fn}, {"at", cert_at}, {"region", v.to_string()}};
      r.tolerances["grid_points"] = cert_opts.grid_points;
      r.tolerances["refine_depth"] = cert_opts.refine_depth;
      const auto res = support_line_certify(f, cert_at, v, cert_opts);
      if (const auto* c = std::get_if<SupportCertificate>(&res)) {
        r.verdict = "certified";
        r.value = {{"slope", c->slope},
                   {"offset", c->offset},
                   {"sampled_region", c->region.to_string()},
                   {"min_margin", c->min_margin},
                   {"argmin", c->argmin},
                   {"evaluations", c->evaluations},
                   {"truncated", c->truncated}};
      } else {
        const auto& ref = std::get<Refutation>(res);
        r.verdict = "refuted";
        r.value = {{"witness", ref.witness}, {"margin", ref.margin}, {"slope", ref.slope}};
      }
      return r;
    };
  });

  // boundary
  std::string bd_fn, bd_dir = "right";
  double bd_at = 0.0, bd_horizon = 50.0;
  auto* boundary = app.add_subcommand("boundary", "Where the tangent of f at a next crosses the graph");
  boundary->add_option("--fn", bd_fn, "Built-in name or expression in t")->required();
  boundary->add_option("--at", bd_at, "Tangency point a")->required();
  boundary->add_option("--dir", bd_dir, "left or right")->check(CLI::IsMember({"left", "right"}))->capture_default_str();
  boundary->add_option("--horizon", bd_horizon, "Search distance")->capture_default_str();
  add_common(boundary, common);
  boundary->callback([&] {
    action = [&] {
      const auto f = functions::resolve(bd_fn);
      RunReport r;
      r.subcommand = "boundary";
      r.inputs = {{"fn", bd_fn}, {"at", bd_at}, {"dir", bd_dir}, {"horizon", bd_horizon}};
      // Root-finding tolerance stays tight; --tol only gates the residual report.
      const auto c = convexity_boundary(f, bd_at, bd_dir == "left" ? Direction::left : Direction::right,
                                        std::min(common.tol, 1e-12), bd_horizon);
      if (c) {
        r.verdict = "found";
        r.value = {{"point", c->point}};
        r.residuals["tangent_gap"] = c->residual;
      } else {
        r.verdict = "unbounded";
      }
      return r;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Check one of the named inequalities");
  verify->require_subcommand(1);

  std::string pop_fn = "square", pop_triplet;
  auto* popoviciu = verify->add_subcommand("popoviciu", "Three-point Popoviciu inequality via the sextic witness");
  popoviciu->add_option("--fn", pop_fn, "Function")->capture_default_str();
  popoviciu->add_option("--triplet", pop_triplet, "a,b,c")->required();
  add_common(popoviciu, common);
  popoviciu->callback([&] {
    action = [&] {
      const auto f = functions::resolve(pop_fn);
      const auto t = triple(pop_triplet);
      RunReport r;
      r.subcommand = "verify popoviciu";
      r.inputs = {{"fn", pop_fn}, {"triplet", t}};
      const auto w = popoviciu_witness(t[0], t[1], t[2]);
      const auto c = popoviciu_verify(f, t[0], t[1], t[2], common.tol);
      r.verdict = truth(c.holds);
      r.value = comparison_json(c);
      r.value["witness_x"] = w.x;
      r.value["witness_y"] = w.y;
      return r;
    };
  });

  std::string xe_lambdas, xe_xs;
  auto* xexp = verify->add_subcommand("xexp", "Weighted Jensen inequality for t e^t (mean >= -1)");
  xexp->add_option("--lambdas", xe_lambdas, "Weights summing to 1")->required();
  xexp->add_option("--xs", xe_xs, "Points")->required();
  add_common(xexp, common);
  xexp->callback([&] {
    action = [&] {
      const Vector l = io::load_vector(xe_lambdas), x = io::load_vector(xe_xs);
      RunReport r;
      r.subcommand = "verify xexp";
      r.inputs = {{"lambdas", l}, {"xs", x}};
      const auto c = xexp_weighted_jensen_verify(l, x, common.tol);
      r.verdict = truth(c.holds);
      r.value = comparison_json(c);
      return r;
    };
  });

  std::string bg_xs;
  auto* bg = verify->add_subcommand("bg", "Borwein-Girgensohn bound for vectors with nonnegative sum");
  bg->add_option("--xs", bg_xs, "Vector")->required();
  add_common(bg, common);
  bg->callback([&] {
    action = [&] {
      const Vector x = io::load_vector(bg_xs);
      RunReport r;
      r.subcommand = "verify bg";
      r.inputs = {{"xs", x}};
      const auto c = borwein_girgensohn_verify(x, common.tol);
      r.verdict = truth(c.holds);
      r.value = comparison_json(c);
      r.value["constant"] = borwein_girgensohn_constant(x.size());
      return r;
    };
  });

  std::string bnl_x, bnl_y;
  auto* bnl = verify->add_subcommand("bnl", "log^2 inequality for positive triplets with matching symmetric data");
  bnl->add_option("--x", bnl_x, "x1,x2,x3")->required();
  bnl->add_option("--y", bnl_y, "y1,y2,y3")->required();
  add_common(bnl, common);
  bnl->callback([&] {
    action = [&] {
      const auto x = triple(bnl_x), y = triple(bnl_y);
      RunReport r;
      r.subcommand = "verify bnl";
      r.inputs = {{"x", x}, {"y", y}};
      const auto c = bnl_triplet_verify(x, y, common.tol);
      r.verdict = truth(c.holds);
      r.value = comparison_json(c);
      return r;
    };
  });

  std::string jn_fn = "xexp", jn_samples;
  std::optional<double> jn_truncate;
  auto* jensen = verify->add_subcommand("jensen", "f(E X) <= E f(X) on a discrete distribution");
  jensen->add_option("--fn", jn_fn, "Function")->capture_default_str();
  jensen->add_option("--samples", jn_samples, "1-D measure: JSON file, 'p1,...' or 'p1,...;w1,...'")->required();
  jensen->add_option("--truncate", jn_truncate, "Clamp X to [-n, n] first");
  add_common(jensen, common);
  jensen->callback([&] {
    action = [&] {
      const auto f = functions::resolve(jn_fn);
      const auto mu = io::load_measure(jn_samples);
      RunReport r;
      r.subcommand = "verify jensen";
      r.inputs = {{"fn", jn_fn}, {"samples", io::measure_to_json(mu)}};
      if (jn_truncate) r.inputs["truncate"] = *jn_truncate;
      const auto rep = probabilistic_jensen_verify(mu, f, jn_truncate, common.tol);
      r.verdict = truth(rep.holds);
      r.value = {{"mean", rep.mean}, {"f_of_mean", rep.f_of_mean}, {"mean_of_f", rep.mean_of_f}};
      return r;
    };
  });

  // spectra
  auto* spectra = app.add_subcommand("spectra", "Matrix trace inequality and Schur-Horn checks");
  spectra->require_subcommand(1);
  std::string ti_input;
  auto* trace_ineq = spectra->add_subcommand("trace-ineq", "sum l_k tr(A_k e^A_k) >= tr(A e^A) for A = sum l_k A_k");
  trace_ineq->add_option("--input", ti_input, "JSON file or text {\"weights\": [...], \"matrices\": [{\"n\", \"entries\"}]}")
      ->required();
  add_common(trace_ineq, common);
  trace_ineq->callback([&] {
    action = [&] {
      const auto j = std::optional<json>(io::load_json(ti_input));
      Vector weights;
      std::vector<SymmetricMatrix> as;
      try {
        weights = j->at("weights").get<Vector>();
        for (const auto& m : j->at("matrices")) as.push_back(io::symmetric_from_json(m));
      } catch (const json::exception& e) {
        throw InputError(std::string("malformed trace-inequality input: ") + e.what());
      }
      RunReport r;
      r.subcommand = "spectra trace-ineq";
      r.inputs = *j;
      const auto rep = trace_inequality_verify(weights, as, common.tol);
      r.verdict = truth(rep.comparison.holds);
      r.value = comparison_json(rep.comparison);
      r.value["mean_min_eigenvalue"] = rep.mean_min_eigenvalue;
      return r;
    };
  });

  std::string sh_input;
  auto* schur_horn = spectra->add_subcommand("schur-horn", "diag(A) majorized by the spectrum of A");
  schur_horn->add_option("--input", sh_input, "JSON file or text {\"n\": n, \"entries\": [[...]]}")->required();
  add_common(schur_horn, common);
  schur_horn->callback([&] {
    action = [&] {
      const auto j = std::optional<json>(io::load_json(sh_input));
      const auto a = io::symmetric_from_json(*j);
      RunReport r;
      r.subcommand = "spectra schur-horn";
      r.inputs = *j;
      const auto eig = jacobi_eigen(a);
      r.verdict = truth(schur_horn_check(a, common.tol));
      r.value = {{"diagonal", a.diagonal_entries()}, {"eigenvalues", eig.values}, {"sweeps", eig.sweeps}};
      return r;
    };
  });

  // poly
  auto* poly = app.add_subcommand("poly", "Polynomial roots and critical-point relations");
  poly->require_subcommand(1);
  std::string poly_coeffs, poly_fn = "abs2";
  auto add_poly = [&](const std::string& name, const std::string& help) {
    auto* s = poly->add_subcommand(name, help);
    s->add_option("--coeffs", poly_coeffs, "Ascending coefficients: JSON file of [re, im] pairs or inline reals")
        ->required();
    add_common(s, common);
    return s;
  };
  auto poly_inputs = [&](const ComplexPolynomial& p) {
    return json{{"coefficients", io::polynomial_to_json(p)}};
  };

  add_poly("roots", "Roots by Aberth-Ehrlich iteration")->callback([&] {
    action = [&] {
      const auto p = io::load_polynomial(poly_coeffs);
      RunReport r;
      r.subcommand = "poly roots";
      r.inputs = poly_inputs(p);
      RootOptions opts;
      opts.tol = std::min(common.tol, opts.tol);
      const auto zs = roots(p, opts);
      double worst = 0.0;
      for (const auto& z : zs) worst = std::max(worst, std::abs(p(z)));
      r.value = {{"roots", io::complex_list_to_json(zs)}};
      r.residuals["max_abs_p"] = worst;
      return r;
    };
  });
  add_poly("gauss-lucas", "Critical points inside the convex hull of the roots")->callback([&] {
    action = [&] {
      const auto p = io::load_polynomial(poly_coeffs);
      RunReport r;
      r.subcommand = "poly gauss-lucas";
      r.inputs = poly_inputs(p);
      r.verdict = truth(gauss_lucas_check(p, common.tol));
      r.value = {{"roots", io::complex_list_to_json(roots(p))},
                 {"critical_points", io::complex_list_to_json(roots(derivative(p)))}};
      return r;
    };
  });
  add_poly("malamud", "Weighted majorization of critical points by roots")->callback([&] {
    action = [&] {
      const auto p = io::load_polynomial(poly_coeffs);
      RunReport r;
      r.subcommand = "poly malamud";
      r.inputs = poly_inputs(p);
      const auto v = malamud_majorization_check(p, common.tol);
      r.verdict = v ? "feasible" : "infeasible";
      r.value = {{"phase1_objective", v.phase1_objective()}};
      if (v) {
        r.value["certificate"] = io::matrix_to_json(v.certificate().entries);
        r.residuals = residuals_json(v.certificate().residuals);
      }
      return r;
    };
  });
  auto* dbs = add_poly("dbs", "Mean of convex f over critical points <= mean over roots");
  dbs->add_option("--fn", poly_fn, "abs2, abs, re, absre or posre")->capture_default_str();
  dbs->callback([&] {
    action = [&] {
      const auto p = io::load_polynomial(poly_coeffs);
      RunReport r;
      r.subcommand = "poly dbs";
      r.inputs = poly_inputs(p);
      r.inputs["fn"] = poly_fn;
      const auto c = debruijn_springer_verify(p, plane_function(poly_fn), common.tol);
      r.verdict = truth(c.holds);
      r.value = comparison_json(c);
      return r;
    };
  });
  add_poly("relative-concavity", "Gaussian relative-concavity inequality for roots in the disc of radius r*")
      ->callback([&] {
        action = [&] {
          const auto p = io::load_polynomial(poly_coeffs);
          RunReport r;
          r.subcommand = "poly relative-concavity";
          r.inputs = poly_inputs(p);
          const auto c = relative_concavity_verify(p, common.tol);
          r.verdict = truth(c.holds);
          r.value = comparison_json(c);
          r.value["radius"] = gauss_concavity_radius();
          return r;
        };
      });

  // reproduce
  std::string rp_target = "all", rp_only;
  std::uint64_t rp_seed = 7;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Recompute the constants, worked examples and acceptance suite");
  reproduce_cmd->add_option("target", rp_target, "all, a group (constants, examples, acceptance) or an entry id")
      ->capture_default_str();
  reproduce_cmd->add_option("--only", rp_only, "Same as the positional target");
  reproduce_cmd->add_option("--seed", rp_seed, "Seed for the randomized suites")->capture_default_str();
  reproduce_cmd->add_flag("--list", [&](std::int64_t) {
    for (const auto& id : reproduce::entry_ids()) out << id << '\n';
    throw CLI::Success();
  }, "List entry ids");
  add_common(reproduce_cmd, common);
  reproduce_cmd->callback([&] {
    action = [&] {
      reproduce::Options opts;
      opts.only = rp_only.empty() ? rp_target : rp_only;
      opts.seed = rp_seed;
      RunReport r;
      r.subcommand = "reproduce";
      r.inputs = {{"only", opts.only}, {"seed", opts.seed}};
      const auto entries = reproduce::run(opts);
      r.value = reproduce::summarize(entries, opts);
      r.verdict = r.value.at("failed").get<int>() == 0 ? "pass" : "fail";
      return r;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kTrue;
    if (dynamic_cast<const CLI::ExtrasError*>(&e) != nullptr || dynamic_cast<const CLI::RequiredError*>(&e) != nullptr)
      err << app.help();
    return kInputError;
  }
  if (!action) {
    err << app.help();
    return kInputError;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    report = action();
    report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.tolerances["tol"] = common.tol;
  } catch (const ConvergenceError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const HypothesisError& e) {
    err << "hypothesis not satisfied: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (common.json)
    out << report.to_json().dump(2) << '\n';
  else
    print_text(report, out);
  return exit_code_for(report.verdict);
}

}  // namespace relconvex::cli
