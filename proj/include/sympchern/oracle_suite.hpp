#pragma once

#include <random>
#include <string>

#include "sympchern/exterior_checks.hpp"

namespace sympchern {

/// Uniform small random rational in [-max_abs, max_abs] with denominator up
/// to max_den.
Rational random_rational(std::mt19937& rng, int max_abs = 9, int max_den = 9);

/// Real 2-form with random rational coefficients on every e^i ^ e^j.
MultiVector random_real_two_form(const ModelSpace& space, std::mt19937& rng);

/// Random (2l,0)-form: random Gaussian-rational combination of
/// eps^{j_1} ^ ... ^ eps^{j_2l} monomials.
MultiVector random_holomorphic_form(const ModelSpace& space, int l,
                                    std::mt19937& rng);

/// Result of the randomized exterior-algebra verification suite on one
/// model space.
struct OracleSuiteResult {
  int n = 0;
  int samples = 0;
  bool identity6_ok = false;
  bool identity7_ok = false;
  bool hodge_riemann_ok = false;
  bool decomposition_ok = false;
  Inertia signature;
  bool signature_ok = false;
  std::string counterexample;  // exact form for the first failure, if any

  bool all_ok() const {
    return identity6_ok && identity7_ok && hodge_riemann_ok &&
           decomposition_ok && signature_ok;
  }
};

/// Runs the wedge identities, Hodge-Riemann positivity (all admissible l),
/// decomposition orthogonality and the pairing signature on the model space
/// of half-dimension n with `samples` random forms per identity.
OracleSuiteResult run_oracle_suite(int n, int samples, unsigned seed = 1);

}  // namespace sympchern
