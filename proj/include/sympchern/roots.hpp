#pragma once

#include <optional>
#include <vector>

#include "sympchern/polynomial.hpp"

namespace sympchern {

/// Which part of the real line to search for roots.
enum class RootDomain { AllReals, PositiveOnly, NegativeOnly };

/// A rational interval certified (via Sturm sign-change counts) to contain
/// exactly one real root of `polynomial` in (lo, hi]. When the root itself
/// is rational, `exact` carries it and hi == root.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  PolyQ polynomial;  // squarefree part of the input
  std::optional<Rational> exact;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
};

/// Sturm chain of p: p, p', then negated Euclidean remainders.
std::vector<PolyQ> sturm_sequence(const PolyQ& p);

/// Sign variations of the chain at x.
int sign_variations(const std::vector<PolyQ>& chain, const Rational& x);

/// Number of distinct real roots of p in (a, b], via Sturm counts on the
/// squarefree part.
int count_real_roots(const PolyQ& p, const Rational& a, const Rational& b);

/// Number of distinct real roots of p in the given domain (0 excluded for
/// the half-line domains).
int count_real_roots(const PolyQ& p, RootDomain domain = RootDomain::AllReals);

/// Cauchy bound: every real root of p lies strictly inside (-B, B).
Rational root_bound(const PolyQ& p);

/// Pairwise-disjoint isolating intervals covering exactly the distinct real
/// roots of p in the domain, sorted by position. Non-exact intervals have
/// non-root endpoints and the root strictly inside. Throws ZeroPolynomial
/// if p == 0.
std::vector<IsolatingInterval> isolate_real_roots(
    const PolyQ& p, RootDomain domain = RootDomain::AllReals);

/// Shrinks the interval by bisection until hi - lo <= width. Exact-root
/// intervals are returned with lo = root - width (so lo < hi holds in
/// reports).
IsolatingInterval refine(IsolatingInterval iv, const Rational& width);

}  // namespace sympchern
