#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "sympchern/binomial.hpp"
#include "sympchern/gaussian.hpp"
#include "sympchern/rational.hpp"

using namespace sympchern;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  Rational r(Int(6), Int(-8));
  CHECK(r.num() == -3);
  CHECK(r.den() == 4);
  CHECK(Rational(Int(0), Int(-7)) == Rational(0));
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), ZeroDenominator);
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(Int(1), Int(3)), b(Int(1), Int(6));
  CHECK(a + b == Rational(Int(1), Int(2)));
  CHECK(a - b == Rational(Int(1), Int(6)));
  CHECK(a * b == Rational(Int(1), Int(18)));
  CHECK(a / b == Rational(2));
  CHECK_THROWS_AS(a / Rational(0), ZeroDenominator);
  CHECK(Rational(Int(2), Int(3)).pow(3) == Rational(Int(8), Int(27)));
  CHECK(Rational(-5).abs() == Rational(5));
  CHECK(Rational(Int(1), Int(3)) < Rational(Int(1), Int(2)));
  CHECK(Rational(Int(-1), Int(3)) > Rational(Int(-1), Int(2)));
}

TEST_CASE("normal form is idempotent under random arithmetic") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int i = 0; i < 500; ++i) {
    int num = d(rng);
    int den = d(rng);
    if (den == 0) continue;
    Rational r{Int(num), Int(den)};
    Rational again(r.num(), r.den());
    CHECK(r == again);
    CHECK(again.den() > 0);
    CHECK(boost::multiprecision::gcd(again.num(), again.den()) == 1);
  }
}

TEST_CASE("parsing accepts integers, fractions and decimals exactly") {
  CHECK(Rational::parse("5/4") == Rational(Int(5), Int(4)));
  CHECK(Rational::parse("-1") == Rational(-1));
  CHECK(Rational::parse("0.25") == Rational(Int(1), Int(4)));
  CHECK(Rational::parse("-2.5") == Rational(Int(-5), Int(2)));
  CHECK(Rational::parse("1/1000000000") ==
        Rational(Int(1), Int(1000000000)));
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("two"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), ParseError);
}

TEST_CASE("string round trip") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-999, 999);
  for (int i = 0; i < 200; ++i) {
    int den = d(rng);
    if (den == 0) continue;
    Rational r(Int(d(rng)), Int(den));
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("decimal rendering is derived from the exact value") {
  CHECK(Rational(Int(5), Int(4)).decimal(6) == "1.25");
  CHECK(Rational(Int(1118033989), Int(1000000000)).decimal(10) ==
        "1.118033989");
  CHECK(Rational(Int(1), Int(3)).decimal(6) == "0.333333");
  CHECK(Rational(Int(-1), Int(3)).decimal(3) == "-0.333");
  CHECK(Rational(0).decimal() == "0");
}

TEST_CASE("gaussian rationals form a field with involutive conjugation") {
  GaussianRational z(Rational(Int(1), Int(2)), Rational(Int(-2), Int(3)));
  CHECK(z.conj().conj() == z);
  CHECK(z.norm_sq() == Rational(Int(1), Int(4)) + Rational(Int(4), Int(9)));
  CHECK(z.norm_sq().sign() >= 0);
  GaussianRational w(Rational(3), Rational(1));
  CHECK((z * w) / w == z);
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK_THROWS_AS(z / GaussianRational(0), ZeroDenominator);
}

TEST_CASE("binomial coefficients follow the vanishing convention") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(-1, 0) == 0);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(0, 0) == 0);
  CHECK(binom(5, -1) == 0);
  CHECK(binom(9, 3) == 84);
}

TEST_CASE("standard binomial coefficients") {
  CHECK(binom_std(0, 0) == 1);
  CHECK(binom_std(4, 2) == 6);
  CHECK(binom_std(2, 3) == 0);
  CHECK(binom_std(6, 3) == 20);
  CHECK(binom_std(40, 20) == Int("137846528820"));
}

TEST_CASE("Vandermonde-style consistency of the convention binomial") {
  for (long long a = 1; a <= 14; ++a)
    for (long long b = 0; b <= a; ++b)
      for (long long c = 0; b + c <= a; ++c) {
        if (a - b < 1 || b + c < 1) continue;
        CHECK(binom(a, b) * binom(a - b, c) ==
              binom(a, b + c) * binom(b + c, b));
      }
}
