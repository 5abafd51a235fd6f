#pragma once

// Exact rationals, extended slopes (adding 1/0 and the "no boundary" marker),
// fractional-linear maps and closed parameter intervals.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "smallknot/error.hpp"

namespace smallknot {

// Expression templates off: values are plain, so auto and temporaries are safe.
using integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

inline integer floor_div(const integer& a, const integer& b) {
  integer q = a / b;
  integer r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

/// Mathematical modulus, result in [0, |m|).
inline integer mod(const integer& a, const integer& m) {
  integer am = boost::multiprecision::abs(m);
  integer r = a % am;
  if (r < 0) r += am;
  return r;
}

inline integer gcd(const integer& a, const integer& b) {
  return boost::multiprecision::gcd(a, b);
}

/// Reduced fraction num/den with den > 0. Zero is 0/1.
class fraction {
 public:
  fraction() = default;

  template <class I>
    requires std::is_integral_v<I>
  fraction(I n) : num_(n) {}

  fraction(integer n) : num_(std::move(n)) {}

  fraction(integer num, integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
      if (num_ == 0) throw error(errc::zero_over_zero, "0/0 has no value");
      throw error(errc::undefined_value,
                  "finite fraction with zero denominator");
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    integer g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  const integer& num() const noexcept { return num_; }
  const integer& den() const noexcept { return den_; }

  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  integer floor() const { return floor_div(num_, den_); }

  fraction reciprocal() const {
    if (num_ == 0) throw error(errc::undefined_value, "reciprocal of zero");
    return fraction(den_, num_);
  }

  fraction abs() const { return fraction(boost::multiprecision::abs(num_), den_); }

  std::string to_string() const { return num_.str() + "/" + den_.str(); }

  friend fraction operator-(const fraction& a) { return fraction(-a.num_, a.den_); }

  friend fraction operator+(const fraction& a, const fraction& b) {
    return fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend fraction operator-(const fraction& a, const fraction& b) { return a + (-b); }
  friend fraction operator*(const fraction& a, const fraction& b) {
    return fraction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend fraction operator/(const fraction& a, const fraction& b) {
    return a * b.reciprocal();
  }

  friend bool operator==(const fraction& a, const fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const fraction& a, const fraction& b) {
    integer lhs = a.num_ * b.den_;
    integer rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  integer num_{0};
  integer den_{1};
};

inline fraction frac_normalize(integer num, integer den) {
  return fraction(std::move(num), std::move(den));
}

/// A slope on a boundary torus: a finite fraction, 1/0, or the empty marker
/// for a component the surface does not meet.
class extended_slope {
 public:
  enum class kind : std::uint8_t { finite, infinity, empty };

  extended_slope(fraction f) : kind_(kind::finite), value_(std::move(f)) {}
  template <class I>
    requires std::is_integral_v<I>
  extended_slope(I n) : extended_slope(fraction(n)) {}

  static extended_slope infinity() { return extended_slope(kind::infinity); }
  static extended_slope empty() { return extended_slope(kind::empty); }

  /// num/den with 1/0 (of either sign) mapped to infinity.
  static extended_slope from_ratio(const integer& num, const integer& den) {
    if (den == 0) {
      if (num == 0) throw error(errc::zero_over_zero, "0/0 has no value");
      return infinity();
    }
    return extended_slope(fraction(num, den));
  }

  kind which() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == kind::finite; }
  bool is_infinity() const noexcept { return kind_ == kind::infinity; }
  bool is_empty() const noexcept { return kind_ == kind::empty; }

  const fraction& value() const {
    if (!is_finite()) throw error(errc::invalid_input, to_string() + " is not a finite slope");
    return value_;
  }

  std::string to_string() const {
    switch (kind_) {
      case kind::finite: return value_.to_string();
      case kind::infinity: return "inf";
      case kind::empty: return "empty";
    }
    return "?";
  }

  friend bool operator==(const extended_slope& a, const extended_slope& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != kind::finite || a.value_ == b.value_;
  }

  /// Total order used only for deterministic containers: finite < inf < empty.
  friend bool operator<(const extended_slope& a, const extended_slope& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return a.kind_ == kind::finite && a.value_ < b.value_;
  }

 private:
  explicit extended_slope(kind k) : kind_(k) {}

  kind kind_;
  fraction value_;
};

/// t -> (a t + b) / (c t + d) on Q ∪ {inf}.
class mobius_map {
 public:
  mobius_map(integer a, integer b, integer c, integer d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (c_ == 0 && d_ == 0) {
      throw error(errc::invalid_input, "Mobius map with zero denominator row");
    }
  }

  /// Degenerate encoding of a constant with no pole.
  static mobius_map constant(const fraction& v) { return {0, v.num(), 0, v.den()}; }

  const integer& a() const noexcept { return a_; }
  const integer& b() const noexcept { return b_; }
  const integer& c() const noexcept { return c_; }
  const integer& d() const noexcept { return d_; }

  integer determinant() const { return a_ * d_ - b_ * c_; }
  bool nondegenerate() const { return determinant() != 0; }
  bool is_constant() const { return !nondegenerate(); }

  /// Value of a degenerate map away from its pole.
  fraction constant_value() const {
    if (nondegenerate()) throw error(errc::invalid_input, "map is not constant");
    return c_ != 0 ? fraction(a_, c_) : fraction(b_, d_);
  }

  mobius_map inverse() const {
    if (!nondegenerate()) throw error(errc::invalid_input, "constant map has no inverse");
    return {d_, -b_, -c_, a_};
  }

  friend bool operator==(const mobius_map&, const mobius_map&) = default;

 private:
  integer a_, b_, c_, d_;
};

inline extended_slope mobius_eval(const mobius_map& m, const extended_slope& t) {
  if (t.is_empty()) throw error(errc::invalid_input, "cannot evaluate a map at the empty slope");
  integer num, den;
  if (t.is_infinity()) {
    num = m.a();
    den = m.c();
  } else {
    const fraction& x = t.value();
    num = m.a() * x.num() + m.b() * x.den();
    den = m.c() * x.num() + m.d() * x.den();
  }
  if (m.is_constant()) {
    if (t.is_finite() && num == 0 && den == 0) {
      throw error(errc::undefined_value, "constant map evaluated at its pole");
    }
    return m.constant_value();
  }
  return extended_slope::from_ratio(num, den);
}

struct solution_set {
  enum class kind : std::uint8_t { none, unique, all };

  kind which = kind::none;
  std::optional<extended_slope> parameter;

  static solution_set none() { return {}; }
  static solution_set all() { return {kind::all, std::nullopt}; }
  static solution_set unique(extended_slope t) { return {kind::unique, std::move(t)}; }
};

/// All t with m(t) = v. Total: the empty slope has no preimage.
inline solution_set mobius_solve(const mobius_map& m, const extended_slope& v) {
  if (v.is_empty()) return solution_set::none();
  if (m.is_constant()) {
    return v == extended_slope(m.constant_value()) ? solution_set::all() : solution_set::none();
  }
  return solution_set::unique(mobius_eval(m.inverse(), v));
}

/// Closed interval [lo, hi]; a missing lower bound is -inf, a missing upper
/// bound is +inf. The unsigned slope inf lies in any interval reaching either.
class param_interval {
 public:
  param_interval(std::optional<fraction> lo, std::optional<fraction> hi)
      : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ && hi_ && *hi_ < *lo_) {
      throw error(errc::invalid_input, "interval with lo > hi");
    }
  }

  static param_interval at_least(fraction lo) { return {std::move(lo), std::nullopt}; }
  static param_interval closed(fraction lo, fraction hi) { return {std::move(lo), std::move(hi)}; }

  const std::optional<fraction>& lo() const noexcept { return lo_; }
  const std::optional<fraction>& hi() const noexcept { return hi_; }

  bool contains(const extended_slope& t) const {
    if (t.is_empty()) return false;
    if (t.is_infinity()) return !lo_ || !hi_;
    const fraction& x = t.value();
    return (!lo_ || *lo_ <= x) && (!hi_ || x <= *hi_);
  }

  std::string to_string() const {
    return "[" + (lo_ ? lo_->to_string() : std::string("-inf")) + ", " +
           (hi_ ? hi_->to_string() : std::string("inf")) + "]";
  }

 private:
  std::optional<fraction> lo_;
  std::optional<fraction> hi_;
};

inline bool interval_contains(const param_interval& iv, const extended_slope& t) {
  return iv.contains(t);
}

}  // namespace smallknot
