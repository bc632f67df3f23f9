#pragma once

// Dense univariate polynomials. IntPolynomial carries the numerators and
// denominators of series; RatPolynomial is the working type for gcds,
// exact division and root isolation.

#include <sdcm/numeric.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sdcm {

template <typename Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }
  static Polynomial monomial(Coeff c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1);
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }

  Coeff operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }
  const Coeff& leading() const { return coeffs_.back(); }

  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
  std::size_t valuation() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return i;
    }
    return 0;
  }

  /// Divides by t^k; the low k coefficients must be zero.
  Polynomial shifted_down(std::size_t k) const {
    if (k >= coeffs_.size()) return {};
    return Polynomial(std::vector<Coeff>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
  }

  Polynomial shifted_up(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Coeff> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> v(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
    return Polynomial(std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Coeff> v(a.coeffs_);
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> v(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Coeff& c, const Polynomial& a) {
    std::vector<Coeff> v(a.coeffs_);
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
  }

  Polynomial derivative() const {
    if (size() <= 1) return {};
    std::vector<Coeff> v(size() - 1);
    for (std::size_t i = 1; i < size(); ++i) v[i - 1] = coeffs_[i] * Coeff(static_cast<long>(i));
    return Polynomial(std::move(v));
  }

  /// Horner evaluation.
  template <typename X>
  X operator()(const X& x) const {
    X acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

/// gcd of the coefficients; 0 for the zero polynomial.
inline Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

/// Integer polynomial proportional to p with coprime coefficients and positive leading coefficient.
inline IntPolynomial primitive_part(const RatPolynomial& p) {
  if (p.is_zero()) return {};
  Integer lcm = 1;
  for (const auto& c : p.coeffs()) {
    const Integer d = denominator_of(c);
    lcm = lcm / gcd(lcm, d) * d;
  }
  std::vector<Integer> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.push_back(numerator_of(c) * (lcm / denominator_of(c)));
  IntPolynomial ip(std::move(v));
  const Integer g = content(ip);
  std::vector<Integer> w(ip.coeffs());
  const bool flip = ip.leading() < 0;
  for (auto& c : w) {
    c /= g;
    if (flip) c = -c;
  }
  return IntPolynomial(std::move(w));
}

inline IntPolynomial primitive_part(const IntPolynomial& p) { return primitive_part(to_rational(p)); }

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
inline std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(a.coeffs());
  const long db = b.degree();
  const long da = a.degree();
  if (da < db) return {RatPolynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1));
  const Rational& lead = b.leading();
  for (long i = da; i >= db; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] / lead;
    if (factor == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = factor;
    for (long j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

/// Exact quotient over Z; throws if b does not divide a over Q or the quotient is not integral.
inline IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) throw std::domain_error("exact_quotient: nonzero remainder");
  std::vector<Integer> v;
  v.reserve(q.size());
  for (const auto& c : q.coeffs()) {
    if (!is_integral(c)) throw std::domain_error("exact_quotient: non-integral quotient");
    v.push_back(numerator_of(c));
  }
  return IntPolynomial(std::move(v));
}

/// Primitive gcd (positive leading coefficient) of two integer polynomials.
/// Uses primitive pseudo-remainder sequences so intermediate values stay integral.
inline IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IntPolynomial x = primitive_part(a);
  IntPolynomial y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return IntPolynomial{1};
    // pseudo-remainder: lc(y)^(deg x - deg y + 1) * x mod y stays in Z[t]
    const unsigned k = static_cast<unsigned>(x.degree() - y.degree() + 1);
    const IntPolynomial scaled = pow(y.leading(), k) * x;
    auto [q, r] = divmod(to_rational(scaled), to_rational(y));
    x = std::move(y);
    y = primitive_part(r);
  }
  return x;
}

/// Squarefree part over Q, as a primitive integer polynomial.
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return primitive_part(p);
  const IntPolynomial g = gcd(p, p.derivative());
  if (g.degree() <= 0) return primitive_part(p);
  return primitive_part(exact_quotient(primitive_part(p) , g));
}

}  // namespace sdcm
