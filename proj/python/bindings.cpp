#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relconvex/convexity.hpp"
#include "relconvex/error.hpp"
#include "relconvex/inequalities.hpp"
#include "relconvex/majorization.hpp"
#include "relconvex/polyroots.hpp"
#include "relconvex/reproduce.hpp"
#include "relconvex/spectra.hpp"
#include "relconvex/transport.hpp"

namespace py = pybind11;
using namespace relconvex;

namespace {

using Rows = std::vector<Vector>;

// Points are given as floats (one-dimensional) or as sequences of floats.
WeightedMeasure to_measure(const py::sequence& points, const std::optional<Vector>& weights) {
  std::vector<Vector> pts;
  for (const auto& p : points) {
    if (py::isinstance<py::sequence>(p))
      pts.push_back(p.cast<Vector>());
    else
      pts.push_back({p.cast<double>()});
  }
  if (pts.empty()) throw InputError("measure has no points");
  const std::size_t d = pts.front().size();
  if (!weights) return WeightedMeasure::uniform(std::move(pts));
  return WeightedMeasure(d, std::move(pts), *weights);
}

ScalarFunction to_function(const std::string& name_or_expr) { return functions::resolve(name_or_expr); }

py::dict comparison_dict(const Comparison& c) {
  py::dict d;
  d["holds"] = c.holds;
  d["lhs"] = c.lhs;
  d["rhs"] = c.rhs;
  d["slack"] = c.slack;
  return d;
}

py::dict verdict_dict(const FeasibilityVerdict& v) {
  py::dict d;
  d["feasible"] = v.is_feasible();
  d["phase1_objective"] = v.phase1_objective();
  if (v.is_feasible()) {
    d["certificate"] = v.certificate().entries.to_rows();
    d["residual"] = v.certificate().residuals.max();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Majorization, transport certificates and points of convexity";

  // Later registrations are tried first, so subclasses go last.
  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", input_error.ptr());
  py::register_exception<HypothesisError>(m, "HypothesisError", input_error.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);

  m.def("is_majorized", [](const Vector& x, const Vector& y, double tol) { return is_majorized(x, y, tol); },
        py::arg("x"), py::arg("y"), py::arg("tol") = 1e-9);

  m.def(
      "hlp_transfer_matrix",
      [](const Vector& x, const Vector& y, double tol) {
        const auto c = hlp_transfer_matrix(x, y, tol);
        return py::make_tuple(c.matrix.entries().to_rows(), c.residual);
      },
      py::arg("x"), py::arg("y"), py::arg("tol") = 1e-9,
      "Doubly stochastic A with x = A y, and the residual max|x - A y|.");

  m.def(
      "weighted_majorization_decide",
      [](const py::sequence& x_points, const py::sequence& y_points, std::optional<Vector> x_weights,
         std::optional<Vector> y_weights, double tol) {
        return verdict_dict(
            weighted_majorization_decide(to_measure(x_points, x_weights), to_measure(y_points, y_weights), tol));
      },
      py::arg("x_points"), py::arg("y_points"), py::arg("x_weights") = py::none(),
      py::arg("y_weights") = py::none(), py::arg("tol") = 1e-9);

  m.def(
      "support_line_certify",
      [](const std::string& f, double a, double lo, double hi, double tol) {
        CertifyOptions opts;
        opts.tol = tol;
        const auto r = support_line_certify(to_function(f), a, Interval::closed(lo, hi), opts);
        py::dict d;
        if (const auto* c = std::get_if<SupportCertificate>(&r)) {
          d["certified"] = true;
          d["slope"] = c->slope;
          d["min_margin"] = c->min_margin;
        } else {
          const auto& ref = std::get<Refutation>(r);
          d["certified"] = false;
          d["witness"] = ref.witness;
          d["margin"] = ref.margin;
          d["slope"] = ref.slope;
        }
        return d;
      },
      py::arg("f"), py::arg("a"), py::arg("lo"), py::arg("hi"), py::arg("tol") = 1e-9);

  m.def(
      "convexity_boundary",
      [](const std::string& f, double a, const std::string& direction, double tol) -> std::optional<double> {
        if (direction != "left" && direction != "right") throw InputError("direction must be left or right");
        const auto c = convexity_boundary(to_function(f), a, direction == "left" ? Direction::left : Direction::right,
                                          tol);
        if (!c) return std::nullopt;
        return c->point;
      },
      py::arg("f"), py::arg("a"), py::arg("direction") = "right", py::arg("tol") = 1e-12,
      "Tangent crossing point, or None when unbounded.");

  m.def("roots", [](const std::vector<Complex>& coeffs) { return roots(ComplexPolynomial(coeffs)); },
        py::arg("coeffs"), "Roots of sum c_k z^k (ascending coefficients).");

  m.def(
      "malamud_majorization_check",
      [](const std::vector<Complex>& coeffs, double tol) {
        return verdict_dict(malamud_majorization_check(ComplexPolynomial(coeffs), tol));
      },
      py::arg("coeffs"), py::arg("tol") = 1e-9);

  m.def(
      "relative_concavity_verify",
      [](const std::vector<Complex>& coeffs, double tol) {
        return comparison_dict(relative_concavity_verify(ComplexPolynomial(coeffs), tol));
      },
      py::arg("coeffs"), py::arg("tol") = 1e-9);

  m.def(
      "popoviciu_verify",
      [](const std::string& f, double a, double b, double c, double tol) {
        return comparison_dict(popoviciu_verify(to_function(f), a, b, c, tol));
      },
      py::arg("f"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("tol") = 1e-9);

  m.def(
      "trace_inequality_verify",
      [](const Vector& lambdas, const std::vector<Rows>& matrices, double tol) {
        std::vector<SymmetricMatrix> as;
        for (const auto& rows : matrices) as.emplace_back(Matrix::from_rows(rows));
        return comparison_dict(trace_inequality_verify(lambdas, as, tol).comparison);
      },
      py::arg("lambdas"), py::arg("matrices"), py::arg("tol") = 1e-9);

  m.def(
      "schur_horn_check",
      [](const Rows& a, double tol) { return schur_horn_check(SymmetricMatrix(Matrix::from_rows(a)), tol); },
      py::arg("a"), py::arg("tol") = 1e-9);

  m.def(
      "eigenvalues", [](const Rows& a) { return jacobi_eigen(SymmetricMatrix(Matrix::from_rows(a))).values; },
      py::arg("a"));

  m.def(
      "reproduce",
      [](const std::string& only, std::uint64_t seed) {
        reproduce::Options opts;
        opts.only = only;
        opts.seed = seed;
        return summarize(reproduce::run(opts), opts).dump();
      },
      py::arg("only") = "all", py::arg("seed") = 7, "JSON text of the reproduction report.");
}
