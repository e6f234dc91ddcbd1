#include "sympchern/sweeps.hpp"

namespace sympchern {

std::vector<TwistSweepCell> twist_sweep(int n_min, int n_max) {
  std::vector<TwistSweepCell> cells;
  for (int n = n_min; n <= n_max; ++n) {
    const int m = n / 2;
    for (int k = 0; k <= m; ++k) {
      std::vector<Rational> J(m + 1, Rational(0));
      J[0] = Rational(1);
      J[k] = Rational(1);
      TwistSweepCell cell;
      cell.n = n;
      cell.k = k;
      cell.invariants = twist_invariants(TwistFamilySpec{n, J});
      Constants constants = constants_for(n);
      cell.limit = ratio_limit(cell.invariants, LimitDirection::PlusInfinity);
      cell.expected = twist_limit_closed_form(n, k);
      cell.verdict = verdict_from_limit(cell.limit, constants);
      cell.condition = Rational(25, 9) * Rational(n - 2 * k) < Rational(n);

      AsymptoticVerdict expected_verdict;
      if (k == m && n % 2 == 0)
        expected_verdict = AsymptoticVerdict::ObstructedIneq1AtInfinity;
      else if (k == m || cell.condition)
        expected_verdict = AsymptoticVerdict::ObstructedIneq2AtInfinity;
      else
        expected_verdict = AsymptoticVerdict::NotObstructedAtInfinity;
      cell.consistent =
          cell.limit == cell.expected && cell.verdict == expected_verdict;
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

std::vector<ProductSweepCell> product_sweep(int n1_min, int n1_max,
                                            int n2_min, int n2_max) {
  std::vector<ProductSweepCell> cells;
  for (int n1 = n1_min; n1 <= n1_max; ++n1) {
    for (int n2 = n2_min; n2 <= n2_max; ++n2) {
      const int n = n1 + n2;
      ProductSweepCell cell;
      cell.n1 = n1;
      cell.n2 = n2;
      cell.invariants =
          product_invariants(ProductFamilySpec{n1, n2, Rational(1)});
      Constants constants = constants_for(n);
      cell.limit = ratio_limit(cell.invariants, LimitDirection::PlusInfinity);
      cell.expected = product_limit_closed_form(n1, n2);
      cell.verdict = verdict_from_limit(cell.limit, constants);
      cell.condition = Rational(25, 9) * Rational(n1) < Rational(n);

      AsymptoticVerdict expected_verdict =
          cell.condition ? AsymptoticVerdict::ObstructedIneq2AtInfinity
                         : AsymptoticVerdict::NotObstructedAtInfinity;
      cell.consistent =
          cell.limit == cell.expected && cell.verdict == expected_verdict;

      // Cases with t small are the swapped family near infinity: the
      // verdict from our family's t -> 0+ ratio must match the swapped
      // family's verdict at +infinity.
      FamilyInvariants swapped =
          product_invariants(ProductFamilySpec{n2, n1, Rational(1)});
      cell.swap_consistent =
          verdict_from_limit(ratio_limit_at_zero(cell.invariants),
                             constants) ==
          verdict_from_limit(ratio_limit(swapped,
                                         LimitDirection::PlusInfinity),
                             constants);
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

}  // namespace sympchern
