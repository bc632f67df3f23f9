#pragma once

// Arbitrary-precision integer and rational aliases plus the few helpers the
// rest of the library needs (printing, parsing, floor, powers).

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

namespace sdcm {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }
inline Rational abs(const Rational& a) { return a < 0 ? Rational(-a) : a; }

/// Largest integer not exceeding q.
inline Integer floor(const Rational& q) {
  Integer n = numerator_of(q);
  Integer d = denominator_of(q);
  Integer fl = n / d;  // truncates toward zero
  if (n < 0 && fl * d != n) fl -= 1;
  return fl;
}

inline Integer ceil(const Rational& q) { return -floor(Rational(-q)); }

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

inline Integer pow(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

/// "p/q" for non-integers, "n" for integers.
inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline std::string to_string(const Integer& n) { return n.str(); }

/// Natural logarithm of a positive integer; safe far beyond double range.
inline double log_of(const Integer& n) {
  const auto bits = boost::multiprecision::msb(n);
  if (bits < 1000) return std::log(n.convert_to<double>());
  const auto shift = bits - 60;
  Integer top = n >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Exact rational value of a finite double.
inline Rational from_double(double x) {
  int exponent = 0;
  double mantissa = std::frexp(x, &exponent);
  // 53 significant bits fit exactly in an int64 after scaling.
  auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational result = Rational(scaled);
  if (exponent >= 0) {
    result *= Rational(Integer(1) << exponent);
  } else {
    result /= Rational(Integer(1) << -exponent);
  }
  return result;
}

/// Parses "p", "-p", "p/q" or a decimal like "1e-9" / "0.001" into an exact rational.
/// Returns false on malformed input.
inline bool parse_rational(std::string_view text, Rational& out) {
  if (text.empty()) return false;
  const auto slash = text.find('/');
  try {
    if (slash != std::string_view::npos) {
      Integer num(std::string(text.substr(0, slash)));
      Integer den(std::string(text.substr(slash + 1)));
      if (den == 0) return false;
      out = Rational(num, den);
      return true;
    }
    if (text.find_first_of(".eE") == std::string_view::npos) {
      out = Rational(Integer(std::string(text)));
      return true;
    }
    // Exact decimal: [-]digits[.digits][e[+-]digits]
    std::string_view mant = text;
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      mant = text.substr(0, e);
      std::size_t used = 0;
      const std::string exp_text(text.substr(e + 1));
      exponent = std::stol(exp_text, &used);
      if (used != exp_text.size()) return false;
    }
    bool negative = false;
    if (!mant.empty() && (mant.front() == '-' || mant.front() == '+')) {
      negative = mant.front() == '-';
      mant.remove_prefix(1);
    }
    std::string digits;
    bool seen_point = false;
    for (char c : mant) {
      if (c == '.') {
        if (seen_point) return false;
        seen_point = true;
      } else if (c >= '0' && c <= '9') {
        digits.push_back(c);
        if (seen_point) --exponent;
      } else {
        return false;
      }
    }
    if (digits.empty()) return false;
    Rational value = Rational(Integer(digits));
    const Integer scale = pow(Integer(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0) {
      value /= Rational(scale);
    } else {
      value *= Rational(scale);
    }
    out = negative ? Rational(-value) : value;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace sdcm
