#pragma once

#include <optional>
#include <vector>

#include "sympchern/invariants.hpp"
#include "sympchern/polynomial.hpp"
#include "sympchern/rational_function.hpp"
#include "sympchern/roots.hpp"

namespace sympchern {

/// Holomorphic twist family omega_t = omega + t Re(beta) on a Kaehler
/// manifold with c1 = -[omega], described by the pairing numbers
/// J_l = integral of omega^{n-2l} ^ beta^l ^ conj(beta)^l, l = 0..floor(n/2).
struct TwistFamilySpec {
  int n;
  std::vector<Rational> J;
};

/// Product family omega_t = eta + t mu on M1^{2n1} x M2^{2n2} with
/// c1(M_i) = -[eta], -[mu]; E = integral of eta^{n1} ^ mu^{n2}.
struct ProductFamilySpec {
  int n1;
  int n2;
  Rational E;
};

/// The three pairing numbers of a family as exact polynomials in t.
struct FamilyInvariants {
  int n;
  PolyQ v;
  PolyQ a;
  PolyQ b;
};

FamilyInvariants twist_invariants(const TwistFamilySpec& spec);
FamilyInvariants product_invariants(const ProductFamilySpec& spec);

SymplecticInvariants evaluate_at(const FamilyInvariants& inv,
                                 const Rational& t);

/// L = lim b(t) v(t) / a(t)^2 as t -> +/-infinity. Throws ZeroDenominator
/// if a == 0.
LimitValue ratio_limit(const FamilyInvariants& inv, LimitDirection direction);

/// Same ratio as t -> 0+ (used for the t -> 1/t swap symmetry of product
/// families).
LimitValue ratio_limit_at_zero(const FamilyInvariants& inv);

enum class AsymptoticVerdict {
  NotObstructedAtInfinity,
  ObstructedIneq1AtInfinity,
  ObstructedIneq2AtInfinity,
};

std::string to_string(AsymptoticVerdict v);

/// Obstruction verdict implied by a limit value: Ineq1 when L exceeds (or
/// is) infinity/k1, Ineq2 when L < k2.
AsymptoticVerdict verdict_from_limit(const LimitValue& limit,
                                     const Constants& constants);

AsymptoticVerdict asymptotic_verdict(const FamilyInvariants& inv,
                                     const Constants& constants);

/// Closed-form twist-family limit for highest nonzero pairing index k:
/// +infinity (n = 2m, k = m), 0 (n = 2m+1, k = m), else
/// n(n-2k-1)/((n-1)(n-2k)).
LimitValue twist_limit_closed_form(int n, int k);

/// Closed-form product-family limit: 0 for n1 = 1, else
/// n(n1-1)/(n1(n-1)).
LimitValue product_limit_closed_form(int n1, int n2);

/// Verdicts at one root of a test polynomial, with the certified interval.
struct ThresholdBreakpoint {
  IsolatingInterval where;
  int sign_p1 = 0;  // sign of k1 a^2 - b v at the root
  int sign_p2 = 0;  // sign of b v - k2 a^2
  int sign_p9 = 0;  // sign of b v - a^2
  int sign_a = 0;
  EinsteinVerdict einstein = EinsteinVerdict::NotObstructed;
  KaehlerVerdict kaehler = KaehlerVerdict::NotObstructed;
};

/// Verdicts on one maximal open interval between consecutive breakpoints.
struct ThresholdRegion {
  Rational sample;  // exact rational point inside the region
  int sign_p1 = 0;
  int sign_p2 = 0;
  int sign_p9 = 0;
  int sign_a = 0;
  EinsteinVerdict einstein = EinsteinVerdict::NotObstructed;
  KaehlerVerdict kaehler = KaehlerVerdict::NotObstructed;
};

/// Exact sign table of the obstruction test polynomials over the admissible
/// domain: regions.size() == breakpoints.size() + 1, alternating
/// region / breakpoint / region ... in increasing t.
struct ThresholdReport {
  PolyQ p1;  // k1 a^2 - b v  (Ineq1 violated where <= 0, given a < 0)
  PolyQ p2;  // b v - k2 a^2  (Ineq2 violated where <= 0, given a < 0)
  PolyQ p9;  // b v - a^2     (Apte violated where > 0)
  RootDomain domain;
  std::vector<ThresholdBreakpoint> breakpoints;
  std::vector<ThresholdRegion> regions;
};

/// Isolates every verdict change point of the family over the domain
/// (AllReals for twist, PositiveOnly for product) and reports exact signs
/// and verdicts per region and per root. Intervals are refined to
/// refine_width. Throws DomainViolation if v has a root in the domain.
ThresholdReport obstruction_thresholds(const FamilyInvariants& inv,
                                       const Constants& constants,
                                       RootDomain domain,
                                       const Rational& refine_width);

}  // namespace sympchern
