#include "relconvex/io.hpp"

#include <filesystem>
#include <fstream>
#include <limits>

#include "relconvex/error.hpp"

namespace relconvex::io {

WeightedMeasure measure_from_json(const json& j) {
  try {
    if (!j.is_object()) throw InputError("measure JSON must be an object");
    std::vector<Vector> points = j.at("points").get<std::vector<Vector>>();
    const std::size_t d = j.contains("dimension") ? j.at("dimension").get<std::size_t>()
                                                  : (points.empty() ? 0 : points.front().size());
    if (j.contains("weights") && !j.at("weights").is_null())
      return WeightedMeasure(d, std::move(points), j.at("weights").get<Vector>());
    if (points.empty()) throw InputError("measure needs at least one point");
    Vector w(points.size(), 1.0 / static_cast<double>(points.size()));
    return WeightedMeasure(d, std::move(points), std::move(w));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed measure JSON: ") + e.what());
  }
}

json measure_to_json(const WeightedMeasure& mu) {
  return {{"dimension", mu.dimension()}, {"points", mu.points()}, {"weights", mu.weights()}};
}

SymmetricMatrix symmetric_from_json(const json& j) {
  try {
    const auto rows = j.at("entries").get<std::vector<Vector>>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != rows.size())
      throw InputError("matrix JSON: n does not match the number of rows");
    return SymmetricMatrix(Matrix::from_rows(rows));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed matrix JSON: ") + e.what());
  }
}

json matrix_to_json(const Matrix& m) {
  if (m.rows() == m.cols()) return {{"n", m.rows()}, {"entries", m.to_rows()}};
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", m.to_rows()}};
}

ComplexPolynomial polynomial_from_json(const json& j) {
  try {
    const json& list = j.is_object() ? j.at("coefficients") : j;
    std::vector<Complex> c;
    for (const auto& item : list) {
      if (item.is_array()) {
        if (item.size() != 2) throw InputError("coefficient pairs must be [re, im]");
        c.emplace_back(item[0].get<double>(), item[1].get<double>());
      } else {
        c.emplace_back(item.get<double>(), 0.0);
      }
    }
    return ComplexPolynomial(std::move(c));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

json complex_list_to_json(const std::vector<Complex>& zs) {
  json out = json::array();
  for (const auto& z : zs) out.push_back({z.real(), z.imag()});
  return out;
}

json polynomial_to_json(const ComplexPolynomial& p) { return complex_list_to_json(p.coefficients()); }

Vector parse_number_list(std::string_view text) {
  Vector out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string item(text.substr(pos, comma - pos));
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw InputError("empty item in number list '" + std::string(text) + "'");
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InputError("not a number: '" + item + "'");
    }
    if (used != item.size()) throw InputError("not a number: '" + item + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::optional<json> read_json_file(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return std::nullopt;
  std::ifstream in(arg);
  if (!in) throw InputError("cannot read '" + arg + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("'" + arg + "' is not valid JSON: " + e.what());
  }
}

json load_json(const std::string& arg) {
  if (auto j = read_json_file(arg)) return *j;
  try {
    return json::parse(arg);
  } catch (const json::exception&) {
    throw InputError("'" + arg + "' is neither a readable file nor JSON text");
  }
}

Vector load_vector(const std::string& arg) {
  if (auto j = read_json_file(arg)) {
    try {
      return j->get<Vector>();
    } catch (const json::exception& e) {
      throw InputError("'" + arg + "' must hold a JSON array of numbers");
    }
  }
  return parse_number_list(arg);
}

WeightedMeasure load_measure(const std::string& arg) {
  if (auto j = read_json_file(arg)) return measure_from_json(*j);
  const auto semi = arg.find(';');
  if (semi == std::string::npos) return WeightedMeasure::uniform_on_line(parse_number_list(arg));
  return WeightedMeasure::on_line(parse_number_list(std::string_view(arg).substr(0, semi)),
                                  parse_number_list(std::string_view(arg).substr(semi + 1)));
}

ComplexPolynomial load_polynomial(const std::string& arg) {
  if (auto j = read_json_file(arg)) return polynomial_from_json(*j);
  return ComplexPolynomial::from_real(parse_number_list(arg));
}

Interval parse_interval(std::string_view text) {
  const Vector v = parse_number_list(text);
  if (v.size() != 2) throw InputError("interval must be 'lo,hi'");
  return Interval(v[0], v[1]);
}

}  // namespace relconvex::io
