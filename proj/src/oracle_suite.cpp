#include "sympchern/oracle_suite.hpp"

#include <vector>

namespace sympchern {

Rational random_rational(std::mt19937& rng, int max_abs, int max_den) {
  std::uniform_int_distribution<int> num(-max_abs, max_abs);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(Int(num(rng)), Int(den(rng)));
}

MultiVector random_real_two_form(const ModelSpace& space, std::mt19937& rng) {
  MultiVector xi(space.n());
  for (int i = 0; i < space.dim(); ++i)
    for (int j = i + 1; j < space.dim(); ++j)
      xi.add_term((IndexMask{1} << i) | (IndexMask{1} << j),
                  GaussianRational(random_rational(rng)));
  return xi;
}

MultiVector random_holomorphic_form(const ModelSpace& space, int l,
                                    std::mt19937& rng) {
  // Every increasing 2l-tuple of eps covectors with a random complex weight.
  MultiVector alpha(space.n());
  std::vector<int> tuple(2 * l);
  auto emit = [&]() {
    MultiVector monomial = MultiVector::basis(space.n(), 0);
    for (int j : tuple) monomial = wedge(monomial, space.complex_covector(j));
    GaussianRational weight(random_rational(rng, 3, 3),
                            random_rational(rng, 3, 3));
    alpha = alpha + monomial * weight;
  };
  auto recurse = [&](auto&& self, int pos, int next) -> void {
    if (pos == 2 * l) {
      emit();
      return;
    }
    for (int j = next; j <= space.n(); ++j) {
      tuple[pos] = j;
      self(self, pos + 1, j + 1);
    }
  };
  recurse(recurse, 0, 1);
  return alpha;
}

OracleSuiteResult run_oracle_suite(int n, int samples, unsigned seed) {
  if (n < 2) throw DimensionTooSmall("oracle suite needs n >= 2");
  ModelSpace space(n);
  std::mt19937 rng(seed);
  OracleSuiteResult result;
  result.n = n;
  result.samples = samples;
  result.identity6_ok = true;
  result.identity7_ok = true;
  result.hodge_riemann_ok = true;
  result.decomposition_ok = true;

  auto record_failure = [&](const MultiVector& form) {
    if (result.counterexample.empty()) result.counterexample = form.str();
  };

  for (int s = 0; s < samples; ++s) {
    MultiVector xi = random_real_two_form(space, rng);
    if (!verify_wedge_identity_6(space, xi).holds) {
      result.identity6_ok = false;
      record_failure(xi);
    }
    if (!verify_wedge_identity_7(space, xi).holds) {
      result.identity7_ok = false;
      record_failure(xi);
    }

    TypeDecomposition parts = decompose(space, xi);
    MultiVector sum =
        parts.omega_part + parts.primitive_11 + parts.anti_invariant;
    bool ok = (sum - xi).is_zero();
    // Orthogonality of the three summands, exactly.
    ok = ok && xi.norm_sq() == parts.omega_part.norm_sq() +
                                   parts.primitive_11.norm_sq() +
                                   parts.anti_invariant.norm_sq();
    // The anti-invariant part pairs to zero against omega.
    ok = ok && parts.anti_invariant.inner(space.omega()).is_zero();
    // The J-invariant/anti-invariant split is idempotent.
    ok = ok && parts.anti_invariant.j_pullback() == -parts.anti_invariant;
    MultiVector invariant = parts.omega_part + parts.primitive_11;
    ok = ok && invariant.j_pullback() == invariant;
    ok = ok && parts.primitive_11.inner(space.omega()).is_zero();
    if (!ok) {
      result.decomposition_ok = false;
      record_failure(xi);
    }
  }

  for (int l = 1; 2 * l <= n; ++l) {
    for (int s = 0; s < samples; ++s) {
      MultiVector alpha = random_holomorphic_form(space, l, rng);
      HodgeRiemannCheck check = verify_hodge_riemann(space, alpha, l);
      bool positivity = check.norm_sq.sign() > 0 || alpha.is_zero();
      if (!check.holds || !positivity) {
        result.hodge_riemann_ok = false;
        record_failure(alpha);
      }
    }
    // Zero form: identity holds with norm zero.
    HodgeRiemannCheck zero = verify_hodge_riemann(space, MultiVector(n), l);
    if (!zero.holds || !zero.norm_sq.is_zero())
      result.hodge_riemann_ok = false;
  }

  result.signature = signature_of_pairing(space);
  result.signature_ok =
      result.signature == Inertia{1, n * n - 1, 0};
  return result;
}

}  // namespace sympchern
