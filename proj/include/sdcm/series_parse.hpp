#pragma once

// Text syntax for series:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)?
//   primary := INTEGER | 't' | '(' expr ')'
//
// Exponents are nonnegative integer literals; "t^-k" is additionally accepted
// when the base is the bare variable t. Implicit multiplication ("2t") and
// identifiers other than t are rejected.

#include <sdcm/error.hpp>
#include <sdcm/laurent_series.hpp>
#include <sdcm/numeric.hpp>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sdcm {

struct SeriesExpr {
  enum class Kind { integer, variable, add, sub, mul, div, pow, neg };

  Kind kind = Kind::integer;
  Integer value;       // integer literal
  long exponent = 0;   // pow
  std::vector<SeriesExpr> args;

  static SeriesExpr literal(Integer v) {
    SeriesExpr e;
    e.value = std::move(v);
    return e;
  }
  static SeriesExpr var() {
    SeriesExpr e;
    e.kind = Kind::variable;
    return e;
  }
  static SeriesExpr binary(Kind k, SeriesExpr lhs, SeriesExpr rhs) {
    SeriesExpr e;
    e.kind = k;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }
  static SeriesExpr power(SeriesExpr base, long exponent) {
    SeriesExpr e;
    e.kind = Kind::pow;
    e.exponent = exponent;
    e.args.push_back(std::move(base));
    return e;
  }
  static SeriesExpr negate(SeriesExpr inner) {
    SeriesExpr e;
    e.kind = Kind::neg;
    e.args.push_back(std::move(inner));
    return e;
  }

  friend bool operator==(const SeriesExpr&, const SeriesExpr&) = default;
};

/// Debug form of the tree, e.g. Div(1, Sub(1, Mul(2, t))).
inline std::string to_string(const SeriesExpr& e) {
  using K = SeriesExpr::Kind;
  auto call = [&](const char* name) {
    std::string s = std::string(name) + "(";
    for (std::size_t i = 0; i < e.args.size(); ++i) {
      if (i) s += ", ";
      s += to_string(e.args[i]);
    }
    return s;
  };
  switch (e.kind) {
    case K::integer: return e.value.str();
    case K::variable: return "t";
    case K::add: return call("Add") + ")";
    case K::sub: return call("Sub") + ")";
    case K::mul: return call("Mul") + ")";
    case K::div: return call("Div") + ")";
    case K::neg: return call("Neg") + ")";
    case K::pow: return call("Pow") + ", " + std::to_string(e.exponent) + ")";
  }
  return {};
}

namespace detail {

class SeriesParser {
 public:
  explicit SeriesParser(std::string_view text) : text_(text) {}

  SeriesExpr parse_all() {
    SeriesExpr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip_ws();
    std::string found = "end of input";
    if (pos_ < text_.size()) found = std::string("'") + text_[pos_] + "'";
    throw ParseError(pos_, std::move(expected), found);
  }

  SeriesExpr parse_expr() {
    SeriesExpr lhs = parse_term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      SeriesExpr rhs = parse_term();
      lhs = SeriesExpr::binary(c == '+' ? SeriesExpr::Kind::add : SeriesExpr::Kind::sub, std::move(lhs),
                               std::move(rhs));
    }
  }

  SeriesExpr parse_term() {
    SeriesExpr lhs = parse_unary();
    for (;;) {
      const char c = peek();
      if (c != '*' && c != '/') return lhs;
      ++pos_;
      SeriesExpr rhs = parse_unary();
      lhs = SeriesExpr::binary(c == '*' ? SeriesExpr::Kind::mul : SeriesExpr::Kind::div, std::move(lhs),
                               std::move(rhs));
    }
  }

  SeriesExpr parse_unary() {
    if (peek() == '-') {
      ++pos_;
      return SeriesExpr::negate(parse_unary());
    }
    return parse_power();
  }

  SeriesExpr parse_power() {
    SeriesExpr base = parse_primary();
    if (peek() != '^') return base;
    ++pos_;
    bool negative = false;
    if (peek() == '-') {
      if (base.kind != SeriesExpr::Kind::variable) fail({"nonnegative integer exponent"});
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail({"integer exponent"});
    const std::size_t start = pos_;
    const Integer n = read_integer();
    if (n > 1000000) {
      pos_ = start;
      fail({"exponent at most 1000000"});
    }
    const long k = n.convert_to<long>();
    return SeriesExpr::power(std::move(base), negative ? -k : k);
  }

  SeriesExpr parse_primary() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return SeriesExpr::literal(read_integer());
    if (c == '(') {
      ++pos_;
      SeriesExpr inner = parse_expr();
      if (peek() != ')') fail({"'^'", "'*'", "'/'", "'+'", "'-'", "')'"});
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      if (text_.substr(pos_, end - pos_) == "t") {
        pos_ = end;
        return SeriesExpr::var();
      }
      fail({"'t'"});
    }
    fail({"integer", "'t'", "'('", "'-'"});
  }

  Integer read_integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the series syntax into a tree. Throws ParseError with the byte
/// offset of the offending character and the set of tokens that would have
/// been accepted there.
inline SeriesExpr parse(std::string_view text) { return detail::SeriesParser(text).parse_all(); }

inline LaurentSeries eval(const SeriesExpr& e) {
  using K = SeriesExpr::Kind;
  switch (e.kind) {
    case K::integer: return LaurentSeries::constant(e.value);
    case K::variable: return LaurentSeries::monomial(1);
    case K::add: return eval(e.args[0]) + eval(e.args[1]);
    case K::sub: return eval(e.args[0]) - eval(e.args[1]);
    case K::mul: return eval(e.args[0]) * eval(e.args[1]);
    case K::div: return eval(e.args[0]) / eval(e.args[1]);
    case K::neg: return -eval(e.args[0]);
    case K::pow: {
      if (e.args[0].kind == K::variable) return LaurentSeries::monomial(e.exponent);
      return pow(eval(e.args[0]), static_cast<unsigned>(e.exponent));
    }
  }
  return {};
}

inline LaurentSeries parse_series(std::string_view text) { return eval(parse(text)); }

namespace detail {

inline std::string render_polynomial(const IntPolynomial& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Integer& c = p.coeffs()[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (negative) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    std::string mono;
    if (i == 1) mono = "t";
    if (i >= 2) mono = "t^" + std::to_string(i);
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

inline std::size_t term_count(const IntPolynomial& p) {
  std::size_t n = 0;
  for (const auto& c : p.coeffs()) n += (c != 0);
  return n;
}

}  // namespace detail

/// Canonical spelling: [t^d*]num[/den], with num and den parenthesized when
/// they have several terms and are combined with something else. Examples:
/// "1/(1-2*t)", "1+2*t", "t^-1*1/(1-t)", "t^2*(1+t)/(1-3*t)".
inline std::string render(const LaurentSeries& a) {
  if (a.is_zero()) return "0";
  const bool has_shift = a.shift() != 0;
  const bool has_den = !(a.den().is_constant() && a.den()[0] == 1);
  std::string num = detail::render_polynomial(a.num());
  if (detail::term_count(a.num()) > 1 && (has_shift || has_den)) num = "(" + num + ")";
  if (has_shift && !has_den && num == "1") {
    return a.shift() == 1 ? std::string("t") : "t^" + std::to_string(a.shift());
  }
  std::string out;
  if (has_shift) out = (a.shift() == 1 ? std::string("t") : "t^" + std::to_string(a.shift())) + "*";
  out += num;
  if (has_den) {
    std::string den = detail::render_polynomial(a.den());
    if (detail::term_count(a.den()) > 1) den = "(" + den + ")";
    out += "/" + den;
  }
  return out;
}

}  // namespace sdcm
