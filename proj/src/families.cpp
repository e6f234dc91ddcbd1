#include "sympchern/families.hpp"

#include <algorithm>

#include "sympchern/binomial.hpp"
#include "sympchern/errors.hpp"

namespace sympchern {

FamilyInvariants twist_invariants(const TwistFamilySpec& spec) {
  if (spec.n < 2)
    throw InvalidSpec("twist family needs half-dimension n >= 2");
  const int m = spec.n / 2;
  if (static_cast<int>(spec.J.size()) != m + 1)
    throw InvalidSpec("twist family needs exactly floor(n/2)+1 pairing numbers");
  if (spec.J[0].sign() <= 0)
    throw InvalidSpec("twist family needs J_0 > 0 (total volume)");
  for (const auto& j : spec.J)
    if (j.sign() < 0)
      throw InvalidSpec("twist pairing numbers must be nonnegative");

  // Expansion of omega^{n-2l} ^ beta^l ^ conj(beta)^l pairings; the l = 0
  // term uses the standard binomial value C(j,0) = 1.
  auto series = [&](int top) {
    PolyQ p;
    for (int l = 0; 2 * l <= top && l <= m; ++l) {
      Rational coeff = Rational(binom_std(top, 2 * l) * binom_std(2 * l, l)) *
                       Rational(Int(1), Int(1) << (2 * l)) * spec.J[l];
      p += PolyQ::monomial(coeff, 2 * l);
    }
    return p;
  };
  // c1 = -[omega], so a carries one sign and b = (-[omega])^2 pairing none.
  return FamilyInvariants{spec.n, series(spec.n), -series(spec.n - 1),
                          series(spec.n - 2)};
}

FamilyInvariants product_invariants(const ProductFamilySpec& spec) {
  if (spec.n1 < 1 || spec.n2 < 1)
    throw InvalidSpec("product family needs n1 >= 1 and n2 >= 1");
  if (spec.E.sign() <= 0)
    throw InvalidSpec("product family needs E > 0");
  const int n = spec.n1 + spec.n2;
  const int n1 = spec.n1;
  const int n2 = spec.n2;

  auto term = [&](Int coeff, int degree) {
    if (degree < 0) return PolyQ();
    return PolyQ::monomial(Rational(std::move(coeff)) * spec.E, degree);
  };
  PolyQ v = term(binom(n, n1), n2);
  PolyQ a = -(term(binom(n - 1, n1 - 1), n2) + term(binom(n - 1, n1), n2 - 1));
  PolyQ b = term(binom(n - 2, n1 - 2), n2) +
            term(2 * binom(n - 2, n1 - 1), n2 - 1) +
            term(binom(n - 2, n1), n2 - 2);
  return FamilyInvariants{n, std::move(v), std::move(a), std::move(b)};
}

SymplecticInvariants evaluate_at(const FamilyInvariants& inv,
                                 const Rational& t) {
  return SymplecticInvariants{inv.n, inv.v.eval(t), inv.a.eval(t),
                              inv.b.eval(t)};
}

LimitValue ratio_limit(const FamilyInvariants& inv,
                       LimitDirection direction) {
  if (inv.a.is_zero())
    throw ZeroDenominator("ratio limit with identically zero a(t)");
  return rational_function_limit(inv.b * inv.v, inv.a * inv.a, direction);
}

LimitValue ratio_limit_at_zero(const FamilyInvariants& inv) {
  if (inv.a.is_zero())
    throw ZeroDenominator("ratio limit with identically zero a(t)");
  PolyQ num = inv.b * inv.v;
  PolyQ den = inv.a * inv.a;
  if (num.is_zero()) return LimitValue::finite(Rational(0));
  auto order = [](const PolyQ& p) {
    int i = 0;
    while (p.coeff(i).is_zero()) ++i;
    return i;
  };
  int on = order(num);
  int od = order(den);
  if (on > od) return LimitValue::finite(Rational(0));
  if (on == od) return LimitValue::finite(num.coeff(on) / den.coeff(od));
  // t -> 0+ with positive denominator near 0 (a^2 > 0), sign from numerator.
  return num.coeff(on).sign() > 0 ? LimitValue::plus_infinity()
                                  : LimitValue::minus_infinity();
}

std::string to_string(AsymptoticVerdict v) {
  switch (v) {
    case AsymptoticVerdict::ObstructedIneq1AtInfinity:
      return "ObstructedIneq1AtInfinity";
    case AsymptoticVerdict::ObstructedIneq2AtInfinity:
      return "ObstructedIneq2AtInfinity";
    default:
      return "NotObstructedAtInfinity";
  }
}

AsymptoticVerdict verdict_from_limit(const LimitValue& limit,
                                     const Constants& constants) {
  if (limit.kind == LimitValue::Kind::PlusInfinity)
    return AsymptoticVerdict::ObstructedIneq1AtInfinity;
  if (limit.kind == LimitValue::Kind::MinusInfinity)
    return AsymptoticVerdict::ObstructedIneq2AtInfinity;
  if (limit.value > constants.k1)
    return AsymptoticVerdict::ObstructedIneq1AtInfinity;
  if (limit.value < constants.k2)
    return AsymptoticVerdict::ObstructedIneq2AtInfinity;
  return AsymptoticVerdict::NotObstructedAtInfinity;
}

AsymptoticVerdict asymptotic_verdict(const FamilyInvariants& inv,
                                     const Constants& constants) {
  return verdict_from_limit(ratio_limit(inv, LimitDirection::PlusInfinity),
                            constants);
}

LimitValue twist_limit_closed_form(int n, int k) {
  const int m = n / 2;
  if (k == m) {
    return n % 2 == 0 ? LimitValue::plus_infinity()
                      : LimitValue::finite(Rational(0));
  }
  return LimitValue::finite(Rational(Int(n) * (n - 2 * k - 1),
                                     Int(n - 1) * (n - 2 * k)));
}

LimitValue product_limit_closed_form(int n1, int n2) {
  if (n1 == 1) return LimitValue::finite(Rational(0));
  const int n = n1 + n2;
  return LimitValue::finite(Rational(Int(n) * (n1 - 1), Int(n1) * (n - 1)));
}

namespace {

int sign_at(const PolyQ& p, const Rational& t) { return p.eval(t).sign(); }

EinsteinVerdict einstein_from_signs(int sign_a, int sign_p1, int sign_p2,
                                    int sign_p9) {
  if (sign_a < 0) {
    if (sign_p1 <= 0) return EinsteinVerdict::ObstructedIneq1;
    if (sign_p2 <= 0) return EinsteinVerdict::ObstructedIneq2;
    return EinsteinVerdict::NotObstructed;
  }
  return sign_p9 != 0 ? EinsteinVerdict::ObstructedPartA
                      : EinsteinVerdict::NotObstructed;
}

KaehlerVerdict kaehler_from_signs(int sign_p9) {
  return sign_p9 > 0 ? KaehlerVerdict::ObstructedApte
                     : KaehlerVerdict::NotObstructed;
}

}  // namespace

ThresholdReport obstruction_thresholds(const FamilyInvariants& inv,
                                       const Constants& constants,
                                       RootDomain domain,
                                       const Rational& refine_width) {
  PolyQ a_sq = inv.a * inv.a;
  PolyQ bv = inv.b * inv.v;
  ThresholdReport report{constants.k1 * a_sq - bv, bv - constants.k2 * a_sq,
                         bv - a_sq, domain,
                         {}, {}};

  // The family must stay symplectic on the whole domain.
  if (inv.v.is_zero() || count_real_roots(inv.v, domain) > 0)
    throw DomainViolation("volume polynomial vanishes inside the domain");

  // Verdicts change only at roots of the test polynomials or of a(t).
  PolyQ combined(1);
  for (const PolyQ* p : std::initializer_list<const PolyQ*>{
           &report.p1, &report.p2, &report.p9, &inv.a})
    if (!p->is_zero()) combined *= p->squarefree_part();
  combined = combined.squarefree_part();

  std::vector<IsolatingInterval> roots;
  if (combined.degree() >= 1) roots = isolate_real_roots(combined, domain);
  for (auto& iv : roots) iv = refine(iv, refine_width);

  // For the positive half-line the leading region needs a sample in
  // (0, first root): push the first interval's lower end above 0.
  if (domain == RootDomain::PositiveOnly && !roots.empty()) {
    Rational tiny = refine_width;
    while (roots.front().lo.sign() <= 0) {
      roots.front() = refine(roots.front(), tiny);
      tiny /= Rational(2);
    }
  }
  if (domain == RootDomain::NegativeOnly && !roots.empty()) {
    Rational tiny = refine_width;
    while (roots.back().hi.sign() >= 0) {
      roots.back() = refine(roots.back(), tiny);
      tiny /= Rational(2);
    }
  }

  // One sample per maximal open region between consecutive roots.
  std::vector<Rational> samples;
  if (roots.empty()) {
    samples.push_back(domain == RootDomain::PositiveOnly
                          ? Rational(1)
                          : (domain == RootDomain::NegativeOnly ? Rational(-1)
                                                                : Rational(0)));
  } else {
    samples.push_back(domain == RootDomain::PositiveOnly
                          ? roots.front().lo / Rational(2)
                          : roots.front().lo - Rational(1));
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      const Rational& hi = roots[i].hi;
      const Rational& lo = roots[i + 1].lo;
      samples.push_back(hi < lo ? (hi + lo) / Rational(2) : hi);
    }
    samples.push_back(domain == RootDomain::NegativeOnly
                          ? roots.back().hi / Rational(2)
                          : roots.back().hi + Rational(1));
  }

  for (const Rational& s : samples) {
    ThresholdRegion region;
    region.sample = s;
    region.sign_p1 = sign_at(report.p1, s);
    region.sign_p2 = sign_at(report.p2, s);
    region.sign_p9 = sign_at(report.p9, s);
    region.sign_a = sign_at(inv.a, s);
    region.einstein = einstein_from_signs(region.sign_a, region.sign_p1,
                                          region.sign_p2, region.sign_p9);
    region.kaehler = kaehler_from_signs(region.sign_p9);
    report.regions.push_back(std::move(region));
  }

  for (std::size_t i = 0; i < roots.size(); ++i) {
    ThresholdBreakpoint bp;
    bp.where = roots[i];
    auto sign_at_root = [&](const PolyQ& p, int left, int right) {
      if (p.is_zero()) return 0;
      bool vanishes =
          bp.where.exact
              ? p.eval(*bp.where.exact).is_zero()
              : count_real_roots(p, bp.where.lo, bp.where.hi) > 0;
      if (vanishes) return 0;
      if (left != right)
        throw InternalError("sign change without an isolated root");
      return left;
    };
    const ThresholdRegion& l = report.regions[i];
    const ThresholdRegion& r = report.regions[i + 1];
    bp.sign_p1 = sign_at_root(report.p1, l.sign_p1, r.sign_p1);
    bp.sign_p2 = sign_at_root(report.p2, l.sign_p2, r.sign_p2);
    bp.sign_p9 = sign_at_root(report.p9, l.sign_p9, r.sign_p9);
    bp.sign_a = sign_at_root(inv.a, l.sign_a, r.sign_a);
    bp.einstein =
        einstein_from_signs(bp.sign_a, bp.sign_p1, bp.sign_p2, bp.sign_p9);
    bp.kaehler = kaehler_from_signs(bp.sign_p9);
    report.breakpoints.push_back(std::move(bp));
  }
  return report;
}

}  // namespace sympchern
