#pragma once

#include <vector>

#include "sympchern/families.hpp"

namespace sympchern {

/// One (n, k) cell of the twist-family grid: J_0 = 1, J_k = 1, all other
/// pairing numbers zero.
struct TwistSweepCell {
  int n;
  int k;
  FamilyInvariants invariants;
  LimitValue limit;
  LimitValue expected;  // closed-form value
  AsymptoticVerdict verdict;
  bool condition;   // (25/9)(n - 2k) < n
  bool consistent;  // limit and verdict match the closed-form expectation
};

std::vector<TwistSweepCell> twist_sweep(int n_min, int n_max);

/// One (n1, n2) cell of the product-family grid at E = 1.
struct ProductSweepCell {
  int n1;
  int n2;
  FamilyInvariants invariants;
  LimitValue limit;
  LimitValue expected;
  AsymptoticVerdict verdict;
  bool condition;       // (25/9) n1 < n
  bool consistent;      // verdict == Ineq2 iff condition, limit == expected
  bool swap_consistent; // t -> 1/t symmetry with the (n2, n1) family
};

std::vector<ProductSweepCell> product_sweep(int n1_min, int n1_max,
                                            int n2_min, int n2_max);

}  // namespace sympchern
