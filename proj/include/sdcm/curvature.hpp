#pragma once

// Curvature of a series with nonnegative integer coefficients:
// curv(F) = limsup a_n^(1/n), computed as 1/rho where rho is the smallest
// positive real root of the canonical denominator.

#include <sdcm/error.hpp>
#include <sdcm/laurent_series.hpp>
#include <sdcm/numeric.hpp>
#include <sdcm/polynomial.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace sdcm {

struct CurvatureConfig {
  /// Leading coefficients inspected by the nonnegativity check.
  std::size_t n_check = kDefaultNCheck;
  /// Maximal width of an interval-valued curvature.
  Rational epsilon = Rational(1, 1000000000);
};

/// A nonnegative real known either exactly (lo == hi) or as an enclosing
/// interval [lo, hi] with rational endpoints. Also used for sums of
/// curvatures (route lengths, distances).
class Curvature {
 public:
  Curvature() = default;
  static Curvature exact(Rational v) { return Curvature(v, v); }
  static Curvature interval(Rational lo, Rational hi) {
    if (hi < lo) std::swap(lo, hi);
    return Curvature(std::move(lo), std::move(hi));
  }

  bool is_exact() const noexcept { return lo_ == hi_; }
  bool is_zero() const noexcept { return is_exact() && lo_ == 0; }
  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }

  /// The exact value; throws for intervals.
  const Rational& value() const {
    if (!is_exact()) throw AmbiguousComparison("curvature is only known as an interval");
    return lo_;
  }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }

  friend bool operator==(const Curvature&, const Curvature&) = default;

  friend Curvature operator+(const Curvature& a, const Curvature& b) {
    return Curvature(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  Curvature& operator+=(const Curvature& b) {
    lo_ += b.lo_;
    hi_ += b.hi_;
    return *this;
  }

  friend Curvature max(const Curvature& a, const Curvature& b) {
    return Curvature(a.lo_ < b.lo_ ? b.lo_ : a.lo_, a.hi_ < b.hi_ ? b.hi_ : a.hi_);
  }

  /// Exact values print as "p/q" or "n"; intervals as "[lo,hi]" in decimals
  /// rounded outward.
  std::string str() const {
    if (is_exact()) return to_string(lo_);
    return "[" + decimal(lo_, false) + "," + decimal(hi_, true) + "]";
  }

  friend std::ostream& operator<<(std::ostream& os, const Curvature& c) { return os << c.str(); }

 private:
  Curvature(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

  static std::string decimal(const Rational& x, bool round_up) {
    constexpr unsigned kDigits = 12;
    const Integer scale = pow(Integer(10), kDigits);
    const Rational scaled = x * Rational(scale);
    Integer n = round_up ? ceil(scaled) : floor(scaled);
    const bool negative = n < 0;
    if (negative) n = -n;
    std::string digits = n.str();
    if (digits.size() <= kDigits) digits.insert(0, kDigits + 1 - digits.size(), '0');
    digits.insert(digits.size() - kDigits, ".");
    return negative ? "-" + digits : digits;
  }

  Rational lo_ = 0;
  Rational hi_ = 0;
};

using Length = Curvature;

enum class Ordering { less, equal, greater, ambiguous };

/// Certain ordering of two enclosures; `ambiguous` when they overlap and are
/// not the same exact value.
inline Ordering compare(const Curvature& a, const Curvature& b) {
  if (a.hi() < b.lo()) return Ordering::less;
  if (b.hi() < a.lo()) return Ordering::greater;
  if (a.is_exact() && b.is_exact() && a.lo() == b.lo()) return Ordering::equal;
  return Ordering::ambiguous;
}

inline Ordering compare(const Curvature& a, const Rational& x) { return compare(a, Curvature::exact(x)); }

namespace detail {

inline RatPolynomial scaled_positive(const RatPolynomial& p) {
  // Positive rescaling keeps signs, which Sturm chains depend on.
  if (p.is_zero()) return p;
  Rational m = abs(p.leading());
  std::vector<Rational> v(p.coeffs());
  for (auto& c : v) c /= m;
  return RatPolynomial(std::move(v));
}

inline std::vector<RatPolynomial> sturm_chain(const IntPolynomial& q) {
  std::vector<RatPolynomial> chain;
  chain.push_back(scaled_positive(to_rational(q)));
  chain.push_back(scaled_positive(to_rational(q.derivative())));
  while (chain.back().degree() > 0) {
    auto [quot, rem] = divmod(chain[chain.size() - 2], chain.back());
    if (rem.is_zero()) break;
    chain.push_back(scaled_positive(-rem));
  }
  return chain;
}

inline int sign_variations(const std::vector<RatPolynomial>& chain, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain) {
    const Rational v = p(x);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

/// Simplest fraction (least denominator) in the closed interval [lo, hi], lo >= 0.
inline Rational simplest_between(const Rational& lo, const Rational& hi) {
  const Integer fl = floor(lo);
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  const Rational frac_lo = lo - Rational(fl);
  const Rational frac_hi = hi - Rational(fl);
  return Rational(fl) + 1 / simplest_between(1 / frac_hi, 1 / frac_lo);
}

inline int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

/// Smallest positive real root of a squarefree primitive polynomial with
/// q(0) != 0, as a bracket; exact roots have lo == hi.
struct RootEnclosure {
  Rational lo;
  Rational hi;
};

inline std::optional<RootEnclosure> smallest_positive_root(const IntPolynomial& q, const Rational& epsilon) {
  const auto chain = sturm_chain(q);
  // Cauchy bound on root moduli.
  Rational bound = 0;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    Rational r = abs(Rational(q.coeffs()[i]) / Rational(q.leading()));
    if (r > bound) bound = r;
  }
  bound += 1;
  Rational lo = 0;
  Rational hi = bound;
  const int v_lo0 = sign_variations(chain, lo);
  if (v_lo0 - sign_variations(chain, hi) <= 0) return std::nullopt;

  // Isolate: no root in (0, lo], exactly one root in (lo, hi].
  int v_lo = v_lo0;
  for (;;) {
    const int v_hi = sign_variations(chain, hi);
    if (v_lo - v_hi == 1) break;
    const Rational mid = (lo + hi) / 2;
    const int v_mid = sign_variations(chain, mid);
    if (v_lo - v_mid >= 1) {
      hi = mid;
    } else {
      lo = mid;
      v_lo = v_mid;
    }
  }
  if (q(hi) == 0) return RootEnclosure{hi, hi};

  // A rational root a/b has b | lead(q); fractions with such denominators are
  // at least 1/lead^2 apart, so once the bracket is narrower the simplest
  // fraction in it is the only candidate.
  const Rational lead = abs(Rational(q.leading()));
  const Rational separation = 1 / (lead * lead);
  int s_lo = sign_of(q(lo));
  auto bisect = [&] {
    const Rational mid = (lo + hi) / 2;
    const int s_mid = sign_of(q(mid));
    if (s_mid == 0) {
      lo = hi = mid;
      return;
    }
    if (s_mid == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  };
  while (lo != hi && hi - lo >= separation) bisect();
  if (lo == hi) return RootEnclosure{lo, hi};
  const Rational candidate = simplest_between(lo, hi);
  if (q(candidate) == 0) return RootEnclosure{candidate, candidate};

  // Irrational: refine until the reciprocal interval [1/hi, 1/lo] is narrow enough.
  while (lo == 0 || 1 / lo - 1 / hi > epsilon) {
    bisect();
    if (lo == hi) break;
  }
  return RootEnclosure{lo, hi};
}

}  // namespace detail

/// Growth rate of the coefficients. Exact(0) for polynomial series; otherwise
/// 1/rho for the smallest positive real pole rho (Pringsheim), exact when rho
/// is rational and an interval of width <= config.epsilon otherwise.
inline Curvature curvature(const LaurentSeries& a, const CurvatureConfig& config = {}) {
  const LaurentSeries s = certify_nonneg(a, config.n_check);
  if (s.is_zero() || s.is_polynomial()) return Curvature::exact(0);
  const IntPolynomial q = squarefree_part(s.den());
  const auto root = detail::smallest_positive_root(q, config.epsilon);
  if (!root) {
    throw NonNegativityViolation("denominator has no positive real root; the series cannot have "
                                 "nonnegative coefficients");
  }
  if (root->lo == root->hi) return Curvature::exact(1 / root->lo);
  return Curvature::interval(1 / root->hi, 1 / root->lo);
}

/// Independent estimate from the shift-normalized expansion over the window
/// [n_max/2, n_max]: (a_n / a_m)^(1/(n-m)) for the outermost positive
/// coefficients a_m, a_n of the window, which cancels the constant factor
/// that biases a_n^(1/n). Falls back to a_n^(1/n) when the window holds a
/// single positive coefficient, and is 0 when it holds none. Only used to
/// cross-check `curvature`.
inline Rational curvature_estimate(const LaurentSeries& a, std::size_t n_max) {
  if (n_max < 8) throw std::invalid_argument("curvature_estimate: n_max must be at least 8");
  const auto coeffs = expansion(a, n_max + 1);
  auto log_at = [&](std::size_t n) { return log_of(numerator_of(coeffs[n])) - log_of(denominator_of(coeffs[n])); };
  std::optional<std::size_t> first;
  std::optional<std::size_t> last;
  for (std::size_t n = n_max / 2; n <= n_max; ++n) {
    if (coeffs[n] <= 0) continue;
    if (!first) first = n;
    last = n;
  }
  if (!first) return Rational(0);
  if (*first == *last) return from_double(std::exp(log_at(*last) / static_cast<double>(*last)));
  return from_double(std::exp((log_at(*last) - log_at(*first)) / static_cast<double>(*last - *first)));
}

}  // namespace sdcm
