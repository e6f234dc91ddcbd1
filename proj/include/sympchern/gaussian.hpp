#pragma once

#include "sympchern/rational.hpp"

namespace sympchern {

/// Element of Q(i): exact complexified scalar for forms with complex
/// coefficients.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT
  GaussianRational(int r) : re(r) {}                  // NOLINT
  GaussianRational(Rational r, Rational i)
      : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussianRational conj() const { return {re, -im}; }

  /// z * conj(z), always real and nonnegative.
  Rational norm_sq() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }

  friend GaussianRational operator+(const GaussianRational& x,
                                    const GaussianRational& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussianRational operator-(const GaussianRational& x,
                                    const GaussianRational& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussianRational operator*(const GaussianRational& x,
                                    const GaussianRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend GaussianRational operator/(const GaussianRational& x,
                                    const GaussianRational& y) {
    Rational n = y.norm_sq();
    if (n.is_zero()) throw ZeroDenominator("division by zero Gaussian rational");
    GaussianRational t = x * y.conj();
    return {t.re / n, t.im / n};
  }

  GaussianRational& operator+=(const GaussianRational& y) {
    return *this = *this + y;
  }
  GaussianRational& operator-=(const GaussianRational& y) {
    return *this = *this - y;
  }
  GaussianRational& operator*=(const GaussianRational& y) {
    return *this = *this * y;
  }

  friend bool operator==(const GaussianRational& x,
                         const GaussianRational& y) = default;

  std::string str() const {
    if (im.is_zero()) return re.str();
    if (re.is_zero()) return im.str() + "*i";
    return re.str() + (im.sign() > 0 ? "+" : "") + im.str() + "*i";
  }
};

}  // namespace sympchern
