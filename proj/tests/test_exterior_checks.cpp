#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "sympchern/exterior_checks.hpp"
#include "sympchern/oracle_suite.hpp"

using namespace sympchern;

namespace {

MultiVector e(const ModelSpace& space, std::initializer_list<int> indices) {
  MultiVector m = MultiVector::basis(space.n(), 0);
  for (int i : indices) m = wedge(m, space.covector(i));
  return m;
}

GaussianRational half() { return GaussianRational(Rational(Int(1), Int(2))); }

}  // namespace

TEST_CASE("decomposition of e1^e2 on n = 2") {
  ModelSpace space(2);
  TypeDecomposition parts = decompose(space, e(space, {1, 2}));
  CHECK(parts.omega_part == space.omega() * half());
  CHECK(parts.primitive_11 == (e(space, {1, 2}) - e(space, {3, 4})) * half());
  CHECK(parts.anti_invariant.is_zero());
}

TEST_CASE("omega decomposes as itself") {
  for (int n = 2; n <= 4; ++n) {
    ModelSpace space(n);
    TypeDecomposition parts = decompose(space, space.omega());
    CHECK(parts.omega_part == space.omega());
    CHECK(parts.primitive_11.is_zero());
    CHECK(parts.anti_invariant.is_zero());
  }
}

TEST_CASE("purely anti-invariant form on n = 2") {
  ModelSpace space(2);
  MultiVector xi = e(space, {1, 3}) - e(space, {2, 4});
  TypeDecomposition parts = decompose(space, xi);
  CHECK(parts.omega_part.is_zero());
  CHECK(parts.primitive_11.is_zero());
  CHECK(parts.anti_invariant == xi);
}

TEST_CASE("decompose rejects bad input") {
  ModelSpace space(2);
  CHECK_THROWS_AS(decompose(space, space.covector(1)), WrongDegree);
  CHECK_THROWS_AS(
      decompose(space, e(space, {1, 2}) * GaussianRational::i()),
      NonRealForm);
}

TEST_CASE("wedge identity 6 on fixed forms") {
  ModelSpace space(2);
  CHECK(verify_wedge_identity_6(space, e(space, {1, 2})).holds);
  for (int n = 2; n <= 4; ++n) {
    ModelSpace s(n);
    auto check = verify_wedge_identity_6(s, s.omega());
    CHECK(check.holds);
    CHECK(check.residual.is_zero());
  }
}

TEST_CASE("wedge identity 7 on fixed forms") {
  ModelSpace space(2);
  MultiVector anti = e(space, {1, 3}) - e(space, {2, 4});
  CHECK(wedge(anti, anti) == space.volume_form() * GaussianRational(2));
  CHECK(verify_wedge_identity_7(space, anti).holds);
  for (int n = 2; n <= 4; ++n) {
    ModelSpace s(n);
    CHECK(verify_wedge_identity_7(s, s.omega()).holds);
  }
}

TEST_CASE("Hodge-Riemann on generators") {
  ModelSpace s2(2);
  MultiVector alpha = wedge(s2.complex_covector(1), s2.complex_covector(2));
  auto check = verify_hodge_riemann(s2, alpha, 1);
  CHECK(check.holds);
  CHECK(check.norm_sq.sign() > 0);

  // The same generator embedded in n = 4 picks up the (n-2l)! factor but
  // keeps the norm.
  ModelSpace s4(4);
  MultiVector alpha4 = wedge(s4.complex_covector(1), s4.complex_covector(2));
  auto check4 = verify_hodge_riemann(s4, alpha4, 1);
  CHECK(check4.holds);
  CHECK(check4.norm_sq == check.norm_sq);

  auto zero = verify_hodge_riemann(s2, MultiVector(2), 1);
  CHECK(zero.holds);
  CHECK(zero.norm_sq.is_zero());
}

TEST_CASE("Hodge-Riemann rejects anti-holomorphic components") {
  ModelSpace space(2);
  MultiVector bad = wedge(space.complex_covector(1),
                          space.complex_covector(2).conjugate());
  CHECK_THROWS_AS(verify_hodge_riemann(space, bad, 1), WrongType);
}

TEST_CASE("pairing signature is Lorentz for n = 2..5") {
  CHECK(signature_of_pairing(ModelSpace(2)) == Inertia{1, 3, 0});
  CHECK(signature_of_pairing(ModelSpace(3)) == Inertia{1, 8, 0});
  CHECK(signature_of_pairing(ModelSpace(4)) == Inertia{1, 15, 0});
  CHECK(signature_of_pairing(ModelSpace(5)) == Inertia{1, 24, 0});
}

TEST_CASE("the span of omega alone is positive") {
  for (int n = 2; n <= 4; ++n) {
    ModelSpace space(n);
    MultiVector top =
        wedge(wedge(space.omega(), space.omega()),
              wedge_pow(space.omega(), n - 2));
    Rational value =
        space.top_coefficient(top).re /
        Rational(factorial(n - 2));
    CHECK(value.sign() > 0);
    CHECK(matrix_inertia({{value}}) == Inertia{1, 0, 0});
  }
}

TEST_CASE("matrix inertia on hand-checked matrices") {
  CHECK(matrix_inertia({{Rational(0)}}) == Inertia{0, 0, 1});
  CHECK(matrix_inertia({{Rational(0), Rational(1)},
                        {Rational(1), Rational(0)}}) == Inertia{1, 1, 0});
  CHECK(matrix_inertia({{Rational(2), Rational(0), Rational(0)},
                        {Rational(0), Rational(-3), Rational(0)},
                        {Rational(0), Rational(0), Rational(0)}}) ==
        Inertia{1, 1, 1});
}

TEST_CASE("invariant two-form basis has dimension n^2") {
  for (int n = 2; n <= 4; ++n) {
    ModelSpace space(n);
    auto basis = invariant_two_form_basis(space);
    CHECK(static_cast<int>(basis.size()) == n * n);
    for (const auto& form : basis) {
      CHECK(form.is_real());
      CHECK(form.j_pullback() == form);
    }
  }
}

TEST_CASE("randomized identity suite passes on n = 2, 3") {
  for (int n = 2; n <= 3; ++n) {
    OracleSuiteResult result = run_oracle_suite(n, 25, 42);
    CHECK(result.identity6_ok);
    CHECK(result.identity7_ok);
    CHECK(result.hodge_riemann_ok);
    CHECK(result.decomposition_ok);
    CHECK(result.signature_ok);
    CHECK(result.all_ok());
    CHECK(result.counterexample.empty());
  }
}
