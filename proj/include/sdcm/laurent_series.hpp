#pragma once

// Exact formal Laurent series of the form t^d * p(t) / q(t).
//
// Canonical form: p(0) != 0 and q(0) != 0 (all powers of t live in d),
// p and q coprime over Q, the joint content of (p, q) is 1 and q(0) > 0.
// The zero series is d = 0, p = 0, q = 1. Structural equality of canonical
// forms is mathematical equality.

#include <sdcm/error.hpp>
#include <sdcm/numeric.hpp>
#include <sdcm/polynomial.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sdcm {

/// Number of leading coefficients inspected by the nonnegativity check.
inline constexpr std::size_t kDefaultNCheck = 64;

class LaurentSeries {
 public:
  /// The zero series.
  LaurentSeries() : den_{1} {}

  LaurentSeries(long shift, IntPolynomial num, IntPolynomial den)
      : shift_(shift), num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
  }

  static LaurentSeries one() { return LaurentSeries(0, IntPolynomial{1}, IntPolynomial{1}); }
  static LaurentSeries constant(Integer c) { return LaurentSeries(0, IntPolynomial{std::move(c)}, IntPolynomial{1}); }
  /// t^d.
  static LaurentSeries monomial(long d) { return LaurentSeries(d, IntPolynomial{1}, IntPolynomial{1}); }
  static LaurentSeries polynomial(IntPolynomial p) { return LaurentSeries(0, std::move(p), IntPolynomial{1}); }
  /// 1 / (1 - c t).
  static LaurentSeries geometric(Integer c) {
    return LaurentSeries(0, IntPolynomial{1}, IntPolynomial{Integer(1), Integer(-c)});
  }

  long shift() const noexcept { return shift_; }
  const IntPolynomial& num() const noexcept { return num_; }
  const IntPolynomial& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  /// True when the expansion has finitely many nonzero terms.
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  /// True for c * t^d.
  bool is_monomial() const noexcept { return !is_zero() && num_.is_constant() && den_.is_constant(); }

  /// Set once the leading coefficients were verified to be nonnegative integers.
  bool nonneg_checked() const noexcept { return nonneg_checked_; }
  LaurentSeries with_nonneg_flag(bool flag = true) const {
    LaurentSeries copy = *this;
    copy.nonneg_checked_ = flag;
    return copy;
  }

  /// The same series with its shift dropped (lowest nonzero term moved to t^0).
  LaurentSeries unshifted() const {
    LaurentSeries copy = *this;
    copy.shift_ = 0;
    return copy;
  }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void canonicalize() {
    if (den_.is_zero()) throw DivisionByZeroSeries();
    if (num_.is_zero()) {
      shift_ = 0;
      den_ = IntPolynomial{1};
      return;
    }
    const auto vp = num_.valuation();
    const auto vq = den_.valuation();
    shift_ += static_cast<long>(vp) - static_cast<long>(vq);
    num_ = num_.shifted_down(vp);
    den_ = den_.shifted_down(vq);

    if (!den_.is_constant() && !num_.is_constant()) {
      const IntPolynomial g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = exact_quotient(num_, g);
        den_ = exact_quotient(den_, g);
      }
    }
    const Integer c = gcd(content(num_), content(den_));
    const bool flip = den_[0] < 0;
    if (c != 1 || flip) {
      std::vector<Integer> p(num_.coeffs());
      std::vector<Integer> q(den_.coeffs());
      for (auto& x : p) x = flip ? Integer(-x / c) : Integer(x / c);
      for (auto& x : q) x = flip ? Integer(-x / c) : Integer(x / c);
      num_ = IntPolynomial(std::move(p));
      den_ = IntPolynomial(std::move(q));
    }
  }

  long shift_ = 0;
  IntPolynomial num_;
  IntPolynomial den_;
  bool nonneg_checked_ = false;
};

inline LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long m = std::min(a.shift(), b.shift());
  const auto ua = static_cast<std::size_t>(a.shift() - m);
  const auto ub = static_cast<std::size_t>(b.shift() - m);
  IntPolynomial num = (a.num() * b.den()).shifted_up(ua) + (b.num() * a.den()).shifted_up(ub);
  LaurentSeries sum(m, std::move(num), a.den() * b.den());
  return sum.with_nonneg_flag(a.nonneg_checked() && b.nonneg_checked());
}

inline LaurentSeries operator-(const LaurentSeries& a) {
  return LaurentSeries(a.shift(), -a.num(), a.den());
}

inline LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

/// Cauchy product; shifts add.
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries prod(a.shift() + b.shift(), a.num() * b.num(), a.den() * b.den());
  return prod.with_nonneg_flag(a.nonneg_checked() && b.nonneg_checked());
}

/// Exact quotient; the result is never flagged nonnegative.
inline LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
  if (b.is_zero()) throw DivisionByZeroSeries();
  return LaurentSeries(a.shift() - b.shift(), a.num() * b.den(), a.den() * b.num());
}

inline LaurentSeries pow(const LaurentSeries& a, unsigned k) {
  LaurentSeries result = LaurentSeries::one().with_nonneg_flag();
  for (unsigned i = 0; i < k; ++i) result = result * a;
  return result;
}

/// Series equality after dropping shifts.
inline bool equal_up_to_shift(const LaurentSeries& a, const LaurentSeries& b) {
  return a.num() == b.num() && a.den() == b.den();
}

/// First `count` coefficients of the shift-normalized expansion p/q, by the
/// linear recurrence q0*a_n = p_n - sum_{i>=1} q_i a_{n-i}.
inline std::vector<Rational> expansion(const LaurentSeries& a, std::size_t count) {
  std::vector<Rational> out(count);
  if (a.is_zero()) return out;
  const auto& p = a.num();
  const auto& q = a.den();
  const std::size_t dq = q.size();
  if (q[0] == 1) {
    std::vector<Integer> ints(count);
    for (std::size_t n = 0; n < count; ++n) {
      Integer acc = p[n];
      for (std::size_t i = 1; i < dq && i <= n; ++i) acc -= q.coeffs()[i] * ints[n - i];
      ints[n] = std::move(acc);
      out[n] = Rational(ints[n]);
    }
    return out;
  }
  const Rational q0(q[0]);
  for (std::size_t n = 0; n < count; ++n) {
    Rational acc(p[n]);
    for (std::size_t i = 1; i < dq && i <= n; ++i) acc -= Rational(q.coeffs()[i]) * out[n - i];
    out[n] = acc / q0;
  }
  return out;
}

/// Coefficient of t^n in the expansion around 0.
inline Integer coefficient(const LaurentSeries& a, long n) {
  const long index = n - a.shift();
  if (index < 0 || a.is_zero()) return 0;
  const auto coeffs = expansion(a, static_cast<std::size_t>(index) + 1);
  const Rational& c = coeffs.back();
  if (!is_integral(c)) {
    throw NonIntegralCoefficient("coefficient of t^" + std::to_string(n) + " is " + to_string(c));
  }
  return numerator_of(c);
}

struct NonnegCheck {
  bool ok = true;
  /// First offending coefficient (degree in the shift-normalized expansion, value).
  std::optional<std::pair<std::size_t, Rational>> witness;
};

/// Inspects coefficients 0..n_terms-1 of the shift-normalized expansion for
/// nonnegative integrality.
inline NonnegCheck check_nonneg(const LaurentSeries& a, std::size_t n_terms = kDefaultNCheck) {
  if (n_terms == 0) throw std::invalid_argument("check_nonneg: n_terms must be at least 1");
  const auto coeffs = expansion(a, n_terms);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] < 0 || !is_integral(coeffs[i])) return {false, std::make_pair(i, coeffs[i])};
  }
  return {};
}

/// Returns a flagged copy, or throws NonNegativityViolation with the witness.
inline LaurentSeries certify_nonneg(const LaurentSeries& a, std::size_t n_terms = kDefaultNCheck) {
  if (a.nonneg_checked()) return a;
  const auto check = check_nonneg(a, n_terms);
  if (!check.ok) {
    const auto& [deg, value] = *check.witness;
    throw NonNegativityViolation("coefficient " + to_string(value) + " at t^" +
                                 std::to_string(static_cast<long>(deg) + a.shift()) +
                                 " is not a nonnegative integer");
  }
  return a.with_nonneg_flag();
}

}  // namespace sdcm
