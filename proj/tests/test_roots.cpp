#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "sympchern/roots.hpp"

using namespace sympchern;

namespace {

PolyQ t() { return PolyQ::variable(); }

Rational r(long long num, long long den = 1) {
  return Rational(Int(num), Int(den));
}

bool contains(const IsolatingInterval& iv, const Rational& x) {
  return iv.lo < x && x <= iv.hi;
}

}  // namespace

TEST_CASE("t^2 - 2 has one root in each of [-2,-1] and [1,2]") {
  PolyQ p = t() * t() - PolyQ(2);
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].hi <= roots[1].lo);
  for (auto& iv : roots) {
    CHECK(count_real_roots(p, iv.lo, iv.hi) == 1);
    iv = refine(iv, r(1, 8));
    CHECK(!iv.exact);
  }
  CHECK(roots[0].lo >= r(-2));
  CHECK(roots[0].hi <= r(-1));
  CHECK(roots[1].lo >= r(1));
  CHECK(roots[1].hi <= r(2));
}

TEST_CASE("t^2 + 1 has no real roots") {
  PolyQ p = t() * t() + PolyQ(1);
  CHECK(isolate_real_roots(p).empty());
  CHECK(count_real_roots(p) == 0);
}

TEST_CASE("5/4 - t^2 on t > 0 isolates sqrt(5)/2") {
  PolyQ p = PolyQ(r(5, 4)) - t() * t();
  auto roots = isolate_real_roots(p, RootDomain::PositiveOnly);
  REQUIRE(roots.size() == 1);
  IsolatingInterval iv = refine(roots[0], r(1, 1000000));
  CHECK(iv.width() <= r(1, 1000000));
  CHECK(iv.lo >= r(1118033, 1000000));
  CHECK(iv.hi <= r(1118035, 1000000));
}

TEST_CASE("roots hit by a bisection point are reported exactly") {
  // The initial interval is symmetric, so a root at 0 is always detected.
  PolyQ p = t() * (t() * t() - PolyQ(2));
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 3);
  REQUIRE(roots[1].exact.has_value());
  CHECK(*roots[1].exact == r(0));
  CHECK(roots[1].lo < r(0));
  CHECK(roots[1].hi == r(0));
  CHECK(count_real_roots(p, roots[1].lo, roots[1].hi) == 1);
  CHECK(!roots[0].exact);
  CHECK(!roots[2].exact);

  // From (1/2, 2) the bisection never lands on the root t = 1, so the
  // interval shrinks around it without being pinned exactly.
  IsolatingInterval iv{r(1, 2), r(2), t() * t() - t(), std::nullopt};
  IsolatingInterval fine = refine(iv, r(1, 1024));
  CHECK(fine.width() <= r(1, 1024));
  CHECK(fine.lo < r(1));
  CHECK(r(1) <= fine.hi);
}

TEST_CASE("half-line domains exclude zero") {
  PolyQ p = t() * (t() - PolyQ(1));
  CHECK(count_real_roots(p, RootDomain::PositiveOnly) == 1);
  CHECK(count_real_roots(p, RootDomain::NegativeOnly) == 0);
  CHECK(count_real_roots(p, RootDomain::AllReals) == 2);
  auto pos = isolate_real_roots(p, RootDomain::PositiveOnly);
  REQUIRE(pos.size() == 1);
  CHECK(contains(pos[0], r(1)));

  PolyQ q = t() * (t() + PolyQ(3));
  auto neg = isolate_real_roots(q, RootDomain::NegativeOnly);
  REQUIRE(neg.size() == 1);
  CHECK(contains(neg[0], r(-3)));
}

TEST_CASE("repeated roots count once") {
  PolyQ p = (t() - PolyQ(1)) * (t() - PolyQ(1)) * (t() + PolyQ(2));
  CHECK(count_real_roots(p) == 2);
  CHECK(isolate_real_roots(p).size() == 2);
}

TEST_CASE("zero polynomial is rejected") {
  CHECK_THROWS_AS(isolate_real_roots(PolyQ()), ZeroPolynomial);
}

TEST_CASE("interval count matches the Sturm root count on random products") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> root(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 60; ++trial) {
    PolyQ p(1);
    int linear_factors = count(rng);
    for (int i = 0; i < linear_factors; ++i)
      p *= t() - PolyQ(r(root(rng), den(rng)));
    if (coin(rng)) p *= t() * t() + PolyQ(1);  // no extra real roots
    for (auto domain : {RootDomain::AllReals, RootDomain::PositiveOnly,
                        RootDomain::NegativeOnly}) {
      auto intervals = isolate_real_roots(p, domain);
      CHECK(static_cast<int>(intervals.size()) ==
            count_real_roots(p, domain));
      for (std::size_t i = 0; i + 1 < intervals.size(); ++i)
        CHECK(intervals[i].hi <= intervals[i + 1].lo);
      for (const auto& iv : intervals) {
        IsolatingInterval fine = refine(iv, r(1, 1 << 20));
        CHECK(fine.width() <= r(1, 1 << 20));
        CHECK(count_real_roots(p, fine.lo, fine.hi) == 1);
      }
    }
  }
}
