#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>

#include "sympchern/errors.hpp"

namespace sympchern {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Every arithmetic result is exact; there is no floating
/// point anywhere in this type.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}      // NOLINT: implicit by design
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT
  Rational(Int n) : num_(std::move(n)), den_(1) {}  // NOLINT
  Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw ZeroDenominator("rational with zero denominator");
    normalize();
  }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator-() const { return Rational(-num_, den_, unchecked{}); }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw ZeroDenominator("division by zero rational");
    return Rational(x.num_ * y.den_, x.den_ * y.num_);
  }

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x,
                                          const Rational& y) {
    // Denominators are positive, so cross-multiplication preserves order.
    Int lhs = x.num_ * y.den_;
    Int rhs = y.num_ * x.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  Rational pow(unsigned e) const {
    Rational r(1);
    Rational base = *this;
    for (; e; e >>= 1) {
      if (e & 1) r *= base;
      base *= base;
    }
    return r;
  }

  /// Exact form, "p/q" or just "p" for integers.
  std::string str() const;

  /// Decimal rendering with the given number of significant digits, derived
  /// from the exact value at print time (round-half-away-from-zero).
  std::string decimal(int significant_digits = 6) const;

  /// Parses "p/q", "p", or a decimal literal like "0.25" (converted exactly).
  static Rational parse(const std::string& text);

 private:
  struct unchecked {};
  Rational(Int num, Int den, unchecked)
      : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

inline Rational abs(const Rational& x) { return x.abs(); }

}  // namespace sympchern
