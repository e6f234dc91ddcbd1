#include "sympchern/roots.hpp"

#include <algorithm>

namespace sympchern {

std::vector<PolyQ> sturm_sequence(const PolyQ& p) {
  std::vector<PolyQ> chain;
  chain.push_back(p);
  if (p.degree() < 1) return chain;
  chain.push_back(p.derivative());
  while (chain.back().degree() >= 1) {
    PolyQ rem = chain[chain.size() - 2].divmod(chain.back()).second;
    if (rem.is_zero()) break;
    chain.push_back((-rem).primitive());
  }
  return chain;
}

int sign_variations(const std::vector<PolyQ>& chain, const Rational& x) {
  int variations = 0;
  int prev = 0;
  for (const auto& q : chain) {
    int s = q.eval(x).sign();
    if (s != 0 && prev != 0 && s != prev) ++variations;
    if (s != 0) prev = s;
  }
  return variations;
}

namespace {

// Sign variations of the chain's values as x -> +inf (dir = +1) or
// -inf (dir = -1): only the leading coefficients matter.
int sign_variations_at_infinity(const std::vector<PolyQ>& chain, int dir) {
  int variations = 0;
  int prev = 0;
  for (const auto& q : chain) {
    if (q.is_zero()) continue;
    int s = q.leading().sign();
    if (dir < 0 && q.degree() % 2 == 1) s = -s;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

}  // namespace

Rational root_bound(const PolyQ& p) {
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = p.coeff(i).abs();
    if (r > m) m = r;
  }
  return Rational(1) + m / p.leading().abs();
}

int count_real_roots(const PolyQ& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw ZeroPolynomial("root count of zero polynomial");
  auto chain = sturm_sequence(p.squarefree_part());
  return sign_variations(chain, a) - sign_variations(chain, b);
}

int count_real_roots(const PolyQ& p, RootDomain domain) {
  if (p.is_zero()) throw ZeroPolynomial("root count of zero polynomial");
  PolyQ sf = p.squarefree_part();
  if (sf.degree() < 1) return 0;
  auto chain = sturm_sequence(sf);
  int at_minus = sign_variations_at_infinity(chain, -1);
  int at_plus = sign_variations_at_infinity(chain, +1);
  switch (domain) {
    case RootDomain::AllReals:
      return at_minus - at_plus;
    case RootDomain::PositiveOnly: {
      int at_zero = sign_variations(chain, Rational(0));
      return at_zero - at_plus;
    }
    case RootDomain::NegativeOnly: {
      int at_zero = sign_variations(chain, Rational(0));
      int n = at_minus - at_zero;
      // (a, 0] counts a root at 0 itself; the open half-line excludes it.
      if (sf.eval(Rational(0)).is_zero()) --n;
      return n;
    }
  }
  return 0;
}

namespace {

struct Isolator {
  PolyQ sf;  // squarefree, nonzero at every endpoint we bisect from
  std::vector<PolyQ> chain;
  std::vector<IsolatingInterval> out;

  int count(const Rational& a, const Rational& b) const {
    return sign_variations(chain, a) - sign_variations(chain, b);
  }

  // Isolates all roots in (a, b]; requires sf(a) != 0 and sf(b) != 0.
  void isolate(const Rational& a, const Rational& b, int roots) {
    if (roots == 0) return;
    if (roots == 1) {
      out.push_back(IsolatingInterval{a, b, sf, std::nullopt});
      return;
    }
    Rational mid = (a + b) / Rational(2);
    if (sf.eval(mid).is_zero()) {
      // Rational root at the midpoint: emit it exactly and carve out a
      // certified root-free collar (mid - delta, mid + delta] around it.
      Rational delta = (b - a) / Rational(4);
      while (true) {
        Rational lo = mid - delta;
        Rational hi = mid + delta;
        if (!sf.eval(lo).is_zero() && !sf.eval(hi).is_zero() &&
            count(lo, hi) == 1) {
          int left = count(a, lo);
          int right = count(hi, b);
          if (left + right == roots - 1) {
            isolate(a, lo, left);
            out.push_back(IsolatingInterval{lo, mid, sf, mid});
            isolate(hi, b, right);
            return;
          }
        }
        delta /= Rational(2);
      }
    }
    int left = count(a, mid);
    isolate(a, mid, left);
    isolate(mid, b, roots - left);
  }
};

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const PolyQ& p,
                                                  RootDomain domain) {
  if (p.is_zero()) throw ZeroPolynomial("root isolation of zero polynomial");
  PolyQ sf = p.squarefree_part();
  if (sf.degree() < 1) return {};

  // For the open half-line domains a root at 0 is excluded; divide it out
  // so that 0 can serve as a non-root bisection endpoint.
  if (domain != RootDomain::AllReals && sf.eval(Rational(0)).is_zero()) {
    sf = sf.divmod(PolyQ::variable()).first;
    if (sf.degree() < 1) return {};
  }

  Isolator iso{sf, sturm_sequence(sf), {}};
  Rational bound = root_bound(sf);
  Rational lo = domain == RootDomain::PositiveOnly ? Rational(0) : -bound;
  Rational hi = domain == RootDomain::NegativeOnly ? Rational(0) : bound;
  iso.isolate(lo, hi, iso.count(lo, hi));
  return std::move(iso.out);
}

IsolatingInterval refine(IsolatingInterval iv, const Rational& width) {
  if (iv.exact) {
    iv.lo = std::max(iv.lo, *iv.exact - width);
    return iv;
  }
  while (iv.hi - iv.lo > width) {
    Rational mid = iv.midpoint();
    Rational value = iv.polynomial.eval(mid);
    if (value.is_zero()) {
      iv.exact = mid;
      iv.lo = std::max(iv.lo, mid - width);
      iv.hi = mid;
      return iv;
    }
    // One simple root strictly inside: the sign flips exactly at the root.
    if (value.sign() == iv.polynomial.eval(iv.lo).sign())
      iv.lo = mid;
    else
      iv.hi = mid;
  }
  return iv;
}

}  // namespace sympchern
