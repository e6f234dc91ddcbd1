#include "sympchern/rational_function.hpp"

namespace sympchern {

LimitValue rational_function_limit(const PolyQ& numerator,
                                   const PolyQ& denominator,
                                   LimitDirection direction) {
  if (denominator.is_zero())
    throw ZeroDenominator("limit of rational function with zero denominator");
  if (numerator.is_zero()) return LimitValue::finite(Rational(0));

  int dn = numerator.degree();
  int dd = denominator.degree();
  if (dn < dd) return LimitValue::finite(Rational(0));
  if (dn == dd)
    return LimitValue::finite(numerator.leading() / denominator.leading());

  int sign = numerator.leading().sign() * denominator.leading().sign();
  if (direction == LimitDirection::MinusInfinity && (dn - dd) % 2 == 1)
    sign = -sign;
  return sign > 0 ? LimitValue::plus_infinity() : LimitValue::minus_infinity();
}

}  // namespace sympchern
