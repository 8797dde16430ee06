#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "relconvex/matrix.hpp"
#include "relconvex/measures.hpp"
#include "relconvex/polyroots.hpp"
#include "relconvex/spectra.hpp"

namespace relconvex::io {

using json = nlohmann::json;

/// {"dimension": d, "points": [[...], ...], "weights": [...]}; weights optional (uniform).
WeightedMeasure measure_from_json(const json& j);
json measure_to_json(const WeightedMeasure& mu);

/// {"n": n, "entries": [[...], ...]}
SymmetricMatrix symmetric_from_json(const json& j);
json matrix_to_json(const Matrix& m);

/// Ascending list whose items are [re, im] pairs or plain reals.
ComplexPolynomial polynomial_from_json(const json& j);
json polynomial_to_json(const ComplexPolynomial& p);
json complex_list_to_json(const std::vector<Complex>& zs);

/// "1, -2.5, 3e-1" -> {1, -2.5, 0.3}
Vector parse_number_list(std::string_view text);

/// File contents when `arg` names a readable file, otherwise nullopt.
std::optional<json> read_json_file(const std::string& arg);

/// A JSON document from a file, or the argument itself parsed as JSON text.
json load_json(const std::string& arg);

/// A real vector from a file (JSON array) or inline comma list.
Vector load_vector(const std::string& arg);

/// A measure from a file, or inline "p1,p2,..." (uniform, one-dimensional)
/// or "p1,p2,...;w1,w2,..." (weighted).
WeightedMeasure load_measure(const std::string& arg);

/// A polynomial from a file or inline ascending real coefficients.
ComplexPolynomial load_polynomial(const std::string& arg);

/// "lo,hi" with inf/-inf allowed.
Interval parse_interval(std::string_view text);

}  // namespace relconvex::io
