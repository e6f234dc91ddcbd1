#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "sympchern/polynomial.hpp"
#include "sympchern/rational_function.hpp"

using namespace sympchern;

namespace {

PolyQ t() { return PolyQ::variable(); }

PolyQ random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> c(-9, 9);
  std::vector<Rational> coeffs(deg(rng) + 1);
  for (auto& x : coeffs) x = Rational(c(rng));
  return PolyQ(std::move(coeffs));
}

}  // namespace

TEST_CASE("basic polynomial arithmetic") {
  PolyQ one_plus_t = PolyQ(1) + t();
  CHECK(one_plus_t * one_plus_t == PolyQ({Rational(1), Rational(2), Rational(1)}));

  PolyQ p = PolyQ(Rational(Int(5), Int(4))) - t() * t();
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);

  CHECK(p.eval(Rational(1)) == Rational(Int(1), Int(4)));
  CHECK(p.derivative() == PolyQ({Rational(0), Rational(-2)}));
  CHECK(PolyQ::monomial(Rational(3), 4).degree() == 4);
}

TEST_CASE("degree of a product is the sum of degrees") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    PolyQ p = random_poly(rng, 6);
    PolyQ q = random_poly(rng, 6);
    if (p.is_zero() || q.is_zero()) {
      CHECK((p * q).is_zero());
      continue;
    }
    CHECK((p * q).degree() == p.degree() + q.degree());
  }
}

TEST_CASE("euclidean division reconstructs the dividend") {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    PolyQ p = random_poly(rng, 8);
    PolyQ d = random_poly(rng, 4);
    if (d.is_zero()) {
      CHECK_THROWS_AS(p.divmod(d), ZeroPolynomial);
      continue;
    }
    auto [q, r] = p.divmod(d);
    CHECK(q * d + r == p);
    CHECK(r.degree() < d.degree());
  }
}

TEST_CASE("gcd and squarefree part") {
  PolyQ tm1 = t() - PolyQ(1);
  PolyQ tp2 = t() + PolyQ(2);
  PolyQ p = tm1 * tm1 * tp2;
  CHECK(PolyQ::gcd(p, p.derivative()).monic() == tm1.monic());
  CHECK(p.squarefree_part().monic() == (tm1 * tp2).monic());
  CHECK(PolyQ::gcd(PolyQ(), PolyQ()).is_zero());
}

TEST_CASE("rendering") {
  PolyQ p = PolyQ(Rational(Int(5), Int(4))) - t() * t();
  CHECK(p.str() == "-t^2 + 5/4");
  CHECK((PolyQ(1) + t() * t()).str() == "t^2 + 1");
  CHECK(PolyQ::monomial(Rational(Int(3), Int(2)), 1).str() == "3/2*t");
  CHECK(PolyQ().str() == "0");
}

TEST_CASE("limits at infinity from degrees and leading coefficients") {
  PolyQ num = PolyQ::monomial(Rational(1), 4) + PolyQ(1);
  PolyQ den = PolyQ::monomial(Rational(1), 2);
  CHECK(rational_function_limit(num, den, LimitDirection::PlusInfinity) ==
        LimitValue::plus_infinity());

  PolyQ num2 = PolyQ::monomial(Rational(3), 2) + t();
  PolyQ den2 = PolyQ::monomial(Rational(6), 2);
  for (auto dir :
       {LimitDirection::PlusInfinity, LimitDirection::MinusInfinity})
    CHECK(rational_function_limit(num2, den2, dir) ==
          LimitValue::finite(Rational(Int(1), Int(2))));

  // Squared pairing of the n = 2 twist family: (1+t^2)/1.
  CHECK(rational_function_limit(PolyQ(1) + t() * t(), PolyQ(1),
                                LimitDirection::PlusInfinity) ==
        LimitValue::plus_infinity());

  CHECK(rational_function_limit(t() * t() * t(), PolyQ(1),
                                LimitDirection::MinusInfinity) ==
        LimitValue::minus_infinity());
  CHECK(rational_function_limit(t(), den2, LimitDirection::PlusInfinity) ==
        LimitValue::finite(Rational(0)));
  CHECK_THROWS_AS(
      rational_function_limit(num, PolyQ(), LimitDirection::PlusInfinity),
      ZeroDenominator);
}

TEST_CASE("finite limits are approached monotonically at t = 10^k") {
  PolyQ num = PolyQ::monomial(Rational(3), 2) + t();
  PolyQ den = PolyQ::monomial(Rational(6), 2);
  LimitValue limit =
      rational_function_limit(num, den, LimitDirection::PlusInfinity);
  REQUIRE(limit.is_finite());
  Rational prev_gap;
  bool have_prev = false;
  Rational x(1000);
  for (int k = 3; k <= 6; ++k, x *= Rational(10)) {
    Rational gap = (num.eval(x) / den.eval(x) - limit.value).abs();
    if (have_prev) CHECK(gap < prev_gap);
    prev_gap = gap;
    have_prev = true;
  }
}
