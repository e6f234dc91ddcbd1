#include "sympchern/invariants.hpp"

#include "sympchern/errors.hpp"
#include "sympchern/multivector.hpp"

namespace sympchern {

Constants constants_for(int n, bool lebrun_k2) {
  if (n < 2)
    throw DimensionTooSmall("obstruction constants need half-dimension >= 2");
  if (n == 2) {
    Rational k2 = lebrun_k2 ? Rational(3, 4) : Rational(2, 3);
    return Constants{Rational(9, 4), k2, Rational(3, 2)};
  }
  Rational k1(25, 9);
  Rational k2 = (Rational(n) - k1) / Rational(n - 1);
  return Constants{k1, k2, Rational(5, 3)};
}

std::string to_string(EinsteinVerdict v) {
  switch (v) {
    case EinsteinVerdict::ObstructedIneq1:
      return "ObstructedIneq1";
    case EinsteinVerdict::ObstructedIneq2:
      return "ObstructedIneq2";
    case EinsteinVerdict::ObstructedPartA:
      return "ObstructedPartA";
    default:
      return "NotObstructed";
  }
}

std::string to_string(KaehlerVerdict v) {
  return v == KaehlerVerdict::ObstructedApte ? "ObstructedApte"
                                             : "NotObstructed";
}

EinsteinVerdict einstein_verdict_from_string(const std::string& s) {
  if (s == "ObstructedIneq1") return EinsteinVerdict::ObstructedIneq1;
  if (s == "ObstructedIneq2") return EinsteinVerdict::ObstructedIneq2;
  if (s == "ObstructedPartA") return EinsteinVerdict::ObstructedPartA;
  if (s == "NotObstructed") return EinsteinVerdict::NotObstructed;
  throw ParseError("unknown Einstein verdict: '" + s + "'");
}

KaehlerVerdict kaehler_verdict_from_string(const std::string& s) {
  if (s == "ObstructedApte") return KaehlerVerdict::ObstructedApte;
  if (s == "NotObstructed") return KaehlerVerdict::NotObstructed;
  throw ParseError("unknown Kaehler verdict: '" + s + "'");
}

namespace {

VerdictDetails details_for(const SymplecticInvariants& inv,
                           const Constants& constants) {
  if (inv.v.sign() <= 0)
    throw NonPositiveVolume("total volume pairing must be positive");
  Rational a_sq = inv.a * inv.a;
  return VerdictDetails{inv.b * inv.v, a_sq, constants.k1 * a_sq,
                        constants.k2 * a_sq};
}

}  // namespace

EinsteinVerdict check_einstein_obstruction(const SymplecticInvariants& inv,
                                           const Constants& constants) {
  VerdictDetails d = details_for(inv, constants);
  if (inv.a.sign() >= 0) {
    // Part A forces a Kaehler-Einstein metric with c1 proportional to
    // [omega]; its pairings satisfy b*v = a^2. Necessary condition only.
    return d.bv == d.a_sq ? EinsteinVerdict::NotObstructed
                          : EinsteinVerdict::ObstructedPartA;
  }
  // Inequalities (strict for non-Kaehler Einstein) fail already at equality.
  if (d.bv >= d.k1_a_sq) return EinsteinVerdict::ObstructedIneq1;
  if (d.bv <= d.k2_a_sq) return EinsteinVerdict::ObstructedIneq2;
  return EinsteinVerdict::NotObstructed;
}

KaehlerVerdict check_kaehler_obstruction(const SymplecticInvariants& inv) {
  if (inv.v.sign() <= 0)
    throw NonPositiveVolume("total volume pairing must be positive");
  return inv.b * inv.v > inv.a * inv.a ? KaehlerVerdict::ObstructedApte
                                       : KaehlerVerdict::NotObstructed;
}

Verdict check_obstructions(const SymplecticInvariants& inv,
                           const Constants& constants) {
  return Verdict{check_einstein_obstruction(inv, constants),
                 check_kaehler_obstruction(inv), details_for(inv, constants)};
}

std::optional<EinsteinWindow> einstein_constant_window(
    const SymplecticInvariants& inv, const Constants& constants) {
  if (inv.v.sign() <= 0)
    throw NonPositiveVolume("total volume pairing must be positive");
  if (inv.a.sign() >= 0) return std::nullopt;
  // s in [bound * a * 4pi / ((n-1)! v), a * 4pi / ((n-1)! v)), as
  // coefficients of pi.
  Rational scale = Rational(4) / (Rational(factorial(inv.n - 1)) * inv.v);
  return EinsteinWindow{constants.scalar_bound * inv.a * scale,
                        inv.a * scale};
}

}  // namespace sympchern
