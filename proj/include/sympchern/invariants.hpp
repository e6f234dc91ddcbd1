#pragma once

#include <optional>
#include <string>

#include "sympchern/rational.hpp"

namespace sympchern {

/// Chern-number data of a compact symplectic manifold (M^{2n}, omega) at a
/// fixed parameter value: v = [omega]^n(M), a = (c1 v [omega]^{n-1})(M),
/// b = (c1^2 v [omega]^{n-2})(M).
struct SymplecticInvariants {
  int n = 2;
  Rational v;
  Rational a;
  Rational b;
};

/// Dimension-dependent constants of the obstruction inequalities and the
/// scalar-curvature window.
struct Constants {
  Rational k1;
  Rational k2;
  Rational scalar_bound;
};

/// k1 = 9/4, k2 = 2/3 and scalar bound 3/2 in dimension 4; k1 = 25/9,
/// k2 = (n - 25/9)/(n - 1) and bound 5/3 in dimension >= 6. The optional
/// flag swaps in the sharper dimension-4 value k2 = 3/4 (off by default;
/// unpublished improvement).
Constants constants_for(int n, bool lebrun_k2 = false);

enum class EinsteinVerdict {
  NotObstructed,
  ObstructedIneq1,   // a < 0 and b*v >= k1*a^2
  ObstructedIneq2,   // a < 0 and b*v <= k2*a^2
  ObstructedPartA,   // a >= 0 and b*v != a^2
};

enum class KaehlerVerdict {
  NotObstructed,
  ObstructedApte,  // b*v > a^2
};

std::string to_string(EinsteinVerdict v);
std::string to_string(KaehlerVerdict v);
EinsteinVerdict einstein_verdict_from_string(const std::string& s);
KaehlerVerdict kaehler_verdict_from_string(const std::string& s);

/// Evaluated inequality sides backing a verdict, all exact.
struct VerdictDetails {
  Rational bv;     // b * v
  Rational a_sq;   // a^2
  Rational k1_a_sq;
  Rational k2_a_sq;
};

struct Verdict {
  EinsteinVerdict einstein;
  KaehlerVerdict kaehler;
  VerdictDetails details;
};

EinsteinVerdict check_einstein_obstruction(const SymplecticInvariants& inv,
                                           const Constants& constants);
KaehlerVerdict check_kaehler_obstruction(const SymplecticInvariants& inv);
Verdict check_obstructions(const SymplecticInvariants& inv,
                           const Constants& constants);

/// Admissible scalar-curvature window for a hypothetical non-Kaehler
/// compatible Einstein metric, as coefficients of pi: s/pi lies in
/// [lo, hi). Empty when a >= 0 (any such metric is Kaehler-Einstein).
struct EinsteinWindow {
  Rational lo;
  Rational hi;
};

std::optional<EinsteinWindow> einstein_constant_window(
    const SymplecticInvariants& inv, const Constants& constants);

}  // namespace sympchern
