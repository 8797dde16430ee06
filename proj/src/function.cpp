#include "relconvex/function.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>

#include "relconvex/error.hpp"

namespace relconvex {

namespace {

void check_derivative(const std::string& name, const ScalarFunction::Fn& f, const ScalarFunction::Fn& df,
                      const Interval& domain) {
  double lo = std::max(domain.lo, -10.0);
  double hi = std::min(domain.hi, 10.0);
  if (!(lo < hi)) {
    lo = domain.lo;
    hi = domain.hi;
  }
  const double w = hi - lo;
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_real_distribution<double> pick(lo + 0.01 * w, hi - 0.01 * w);
  const double step = std::cbrt(std::numeric_limits<double>::epsilon());
  for (int k = 0; k < 100; ++k) {
    const double x = pick(rng);
    const double h = step * std::max(std::abs(x), 1e-3);
    const double fd = (f(x + h) - f(x - h)) / (2.0 * h);
    const double d = df(x);
    if (!std::isfinite(d) || std::abs(d - fd) > 1e-5 * std::max(1.0, std::abs(d))) {
      std::ostringstream os;
      os.precision(17);
      os << "derivative of '" << name << "' disagrees with finite differences at t=" << x << " (" << d << " vs "
         << fd << ")";
      throw InputError(os.str());
    }
  }
}

}  // namespace

ScalarFunction::ScalarFunction(std::string name, Fn value, Interval domain, std::optional<Fn> derivative)
    : name_(std::move(name)), value_(std::move(value)), domain_(domain), derivative_(std::move(derivative)) {
  if (!value_) throw InputError("function '" + name_ + "' has no evaluator");
  if (derivative_) check_derivative(name_, value_, *derivative_, domain_);
}

double ScalarFunction::operator()(double t) const {
  if (!domain_.contains(t)) {
    std::ostringstream os;
    os.precision(17);
    os << "point " << t << " outside the domain " << domain_.to_string() << " of '" << name_ << "'";
    throw DomainError(os.str());
  }
  const double v = value_(t);
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os.precision(17);
    os << "'" << name_ << "' is not finite at " << t;
    throw DomainError(os.str());
  }
  return v;
}

double ScalarFunction::derivative(double t) const {
  if (!derivative_) throw InputError("function '" + name_ + "' has no derivative");
  if (!domain_.contains(t)) {
    std::ostringstream os;
    os.precision(17);
    os << "point " << t << " outside the domain " << domain_.to_string() << " of the derivative of '" << name_ << "'";
    throw DomainError(os.str());
  }
  return (*derivative_)(t);
}

namespace functions {

ScalarFunction xexp() {
  return {"xexp", [](double t) { return t * std::exp(t); }, Interval::real_line(),
          [](double t) { return (1.0 + t) * std::exp(t); }};
}

ScalarFunction gauss1d() {
  return {"gauss1d", [](double t) { return std::exp(-t * t); }, Interval::real_line(),
          [](double t) { return -2.0 * t * std::exp(-t * t); }};
}

ScalarFunction log_squared() {
  const double inf = std::numeric_limits<double>::infinity();
  return {"log2",
          [](double t) {
            const double l = std::log(t);
            return l * l;
          },
          Interval(0.0, inf, true, true), [](double t) { return 2.0 * std::log(t) / t; }};
}

ScalarFunction square() {
  return {"square", [](double t) { return t * t; }, Interval::real_line(), [](double t) { return 2.0 * t; }};
}

ScalarFunction abs_x2_minus_1() {
  return {"absx2m1", [](double t) { return std::abs(t * t - 1.0); }, Interval::real_line()};
}

ScalarFunction affine(double slope, double intercept) {
  return {"affine", [=](double t) { return slope * t + intercept; }, Interval::real_line(),
          [=](double) { return slope; }};
}

ScalarFunction absolute() { return {"abs", [](double t) { return std::abs(t); }, Interval::real_line()}; }

ScalarFunction exponential() {
  return {"exp", [](double t) { return std::exp(t); }, Interval::real_line(), [](double t) { return std::exp(t); }};
}

ScalarFunction positive_part() {
  return {"pos", [](double t) { return std::max(t, 0.0); }, Interval::real_line()};
}

std::optional<ScalarFunction> builtin(std::string_view name) {
  if (name == "xexp") return xexp();
  if (name == "gauss1d") return gauss1d();
  if (name == "log2") return log_squared();
  if (name == "square") return square();
  if (name == "absx2m1") return abs_x2_minus_1();
  return std::nullopt;
}

std::vector<std::string> builtin_names() { return {"xexp", "gauss1d", "log2", "square", "absx2m1"}; }

namespace {

using Node = std::function<double(double)>;

class Parser {
 public:
  explicit Parser(std::string_view s) : src_(s) {}

  Node parse() {
    Node n = expr();
    skip();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return n;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("expression error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                     std::string(src_) + "'");
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Node expr() {
    Node lhs = term();
    while (true) {
      if (eat('+')) {
        Node rhs = term();
        lhs = [lhs, rhs](double t) { return lhs(t) + rhs(t); };
      } else if (eat('-')) {
        Node rhs = term();
        lhs = [lhs, rhs](double t) { return lhs(t) - rhs(t); };
      } else {
        return lhs;
      }
    }
  }

  Node term() {
    Node lhs = unary();
    while (true) {
      if (eat('*')) {
        Node rhs = unary();
        lhs = [lhs, rhs](double t) { return lhs(t) * rhs(t); };
      } else if (eat('/')) {
        Node rhs = unary();
        lhs = [lhs, rhs](double t) { return lhs(t) / rhs(t); };
      } else {
        return lhs;
      }
    }
  }

  Node unary() {
    if (eat('-')) {
      Node inner = unary();
      return [inner](double t) { return -inner(t); };
    }
    if (eat('+')) return unary();
    return power();
  }

  // Right associative: a^b^c = a^(b^c).
  Node power() {
    Node base = primary();
    if (eat('^')) {
      Node exponent = unary();
      return [base, exponent](double t) { return std::pow(base(t), exponent(t)); };
    }
    return base;
  }

  Node primary() {
    skip();
    if (pos_ >= src_.size()) fail("unexpected end");
    const char c = src_[pos_];
    if (eat('(')) {
      Node inner = expr();
      if (!eat(')')) fail("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(std::string(src_.substr(pos_)), &used);
      } catch (const std::exception&) {
        fail("bad number");
      }
      pos_ += used;
      return [v](double) { return v; };
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const std::string word(src_.substr(start, pos_ - start));
      if (word == "t" || word == "x") return [](double t) { return t; };
      if (word == "e") return [](double) { return std::numbers::e; };
      if (word == "pi") return [](double) { return std::numbers::pi; };
      double (*fn)(double) = nullptr;
      if (word == "exp") fn = [](double v) { return std::exp(v); };
      else if (word == "log") fn = [](double v) { return std::log(v); };
      else if (word == "sqrt") fn = [](double v) { return std::sqrt(v); };
      else if (word == "abs") fn = [](double v) { return std::abs(v); };
      else if (word == "sin") fn = [](double v) { return std::sin(v); };
      else if (word == "cos") fn = [](double v) { return std::cos(v); };
      else if (word == "tanh") fn = [](double v) { return std::tanh(v); };
      else fail("unknown identifier '" + word + "'");
      if (!eat('(')) fail("expected '(' after " + word);
      Node arg = expr();
      if (!eat(')')) fail("missing ')'");
      return [fn, arg](double t) { return fn(arg(t)); };
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

ScalarFunction parse_expression(std::string_view text) {
  Node node = Parser(text).parse();
  return {std::string(text), std::move(node), Interval::real_line()};
}

ScalarFunction resolve(std::string_view name_or_expr) {
  if (auto f = builtin(name_or_expr)) return *f;
  return parse_expression(name_or_expr);
}

}  // namespace functions

}  // namespace relconvex
