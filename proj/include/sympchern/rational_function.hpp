#pragma once

#include "sympchern/polynomial.hpp"

namespace sympchern {

enum class LimitDirection { PlusInfinity, MinusInfinity };

/// Limit of a rational function at +/- infinity: either a finite rational
/// or a signed infinity.
struct LimitValue {
  enum class Kind { Finite, PlusInfinity, MinusInfinity } kind;
  Rational value;  // meaningful only when kind == Finite

  static LimitValue finite(Rational v) {
    return {Kind::Finite, std::move(v)};
  }
  static LimitValue plus_infinity() {
    return {Kind::PlusInfinity, Rational(0)};
  }
  static LimitValue minus_infinity() {
    return {Kind::MinusInfinity, Rational(0)};
  }

  bool is_finite() const { return kind == Kind::Finite; }

  friend bool operator==(const LimitValue& a, const LimitValue& b) {
    if (a.kind != b.kind) return false;
    return a.kind != Kind::Finite || a.value == b.value;
  }

  std::string str() const {
    switch (kind) {
      case Kind::PlusInfinity:
        return "+inf";
      case Kind::MinusInfinity:
        return "-inf";
      default:
        return value.str();
    }
  }
};

/// lim_{t -> direction} numerator(t) / denominator(t), read off the degrees
/// and leading coefficients. Throws ZeroDenominator if denominator == 0.
LimitValue rational_function_limit(const PolyQ& numerator,
                                   const PolyQ& denominator,
                                   LimitDirection direction);

}  // namespace sympchern
