// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "sympchern/families.hpp"
#include "sympchern/oracle_suite.hpp"
#include "sympchern/sweeps.hpp"

using namespace sympchern;

namespace {

Rational r(long long num, long long den = 1) {
  return Rational(Int(num), Int(den));
}

int failures = 0;

void report(int number, const std::string& name, bool ok,
            const std::string& note = "") {
  std::cout << "criterion " << number << " (" << name << "): "
            << (ok ? "pass" : "FAIL");
  if (!note.empty()) std::cout << " -- " << note;
  std::cout << "\n";
  if (!ok) ++failures;
}

bool constants_table() {
  Constants c2 = constants_for(2);
  bool ok = c2.k1 == r(9, 4) && c2.k2 == r(2, 3);
  for (int n = 3; n <= 12; ++n) {
    Constants c = constants_for(n);
    ok = ok && c.k1 == r(25, 9) &&
         c.k2 == (r(n) - r(25, 9)) / r(n - 1);
  }
  return ok;
}

bool wedge_identity_suite() {
  for (int n = 2; n <= 4; ++n) {
    OracleSuiteResult result = run_oracle_suite(n, 100, 1);
    if (!result.identity6_ok || !result.identity7_ok) return false;
  }
  return true;
}

bool hodge_riemann_suite() {
  std::mt19937 rng(2);
  for (int n = 2; n <= 4; ++n) {
    ModelSpace space(n);
    for (int l = 1; 2 * l <= n; ++l) {
      for (int s = 0; s < 100; ++s) {
        MultiVector alpha = random_holomorphic_form(space, l, rng);
        HodgeRiemannCheck check = verify_hodge_riemann(space, alpha, l);
        if (!check.holds) return false;
        if (check.norm_sq.sign() < 0) return false;
        if (check.norm_sq.is_zero() != alpha.is_zero()) return false;
      }
      HodgeRiemannCheck zero = verify_hodge_riemann(space, MultiVector(n), l);
      if (!zero.holds || !zero.norm_sq.is_zero()) return false;
    }
  }
  return true;
}

bool lorentz_signature() {
  for (int n = 2; n <= 5; ++n)
    if (!(signature_of_pairing(ModelSpace(n)) == Inertia{1, n * n - 1, 0}))
      return false;
  return true;
}

bool twist_asymptotics() {
  int discrepancies = 0;
  for (const auto& cell : twist_sweep(4, 12)) {
    if (!(cell.limit == cell.expected)) ++discrepancies;
    if (cell.k < cell.n / 2) {
      bool ineq2 =
          cell.verdict == AsymptoticVerdict::ObstructedIneq2AtInfinity;
      if (ineq2 != cell.condition) ++discrepancies;
    }
    if (!cell.consistent) ++discrepancies;
  }
  return discrepancies == 0;
}

bool product_asymptotics(std::string& note) {
  bool case_i_zero = true;       // published value L = 0 for 2n1 = 4
  bool case_iii_formula = true;  // L = n(n1-1)/(n1(n-1))
  bool equivalence = true;       // Ineq2 verdict <=> (25/9) n1 < n
  bool swap_symmetry = true;
  for (const auto& cell : product_sweep(2, 8, 2, 8)) {
    const int n = cell.n1 + cell.n2;
    if (cell.n1 == 2 && !(cell.limit == LimitValue::finite(r(0))))
      case_i_zero = false;
    if (cell.n1 >= 3 &&
        !(cell.limit == LimitValue::finite(Rational(
              Int(n) * (cell.n1 - 1), Int(cell.n1) * (n - 1)))))
      case_iii_formula = false;
    bool ineq2 = cell.verdict == AsymptoticVerdict::ObstructedIneq2AtInfinity;
    if (ineq2 != cell.condition) equivalence = false;
    if (!cell.swap_consistent) swap_symmetry = false;
  }
  if (!case_i_zero)
    note = "2n1 = 4 cells give L = n/(2(n-1)), not the published 0";
  return case_i_zero && case_iii_formula && equivalence && swap_symmetry;
}

bool worked_example() {
  FamilyInvariants inv = twist_invariants(TwistFamilySpec{2, {r(1), r(2)}});
  PolyQ t = PolyQ::variable();
  if (!(inv.a == PolyQ(-1) && inv.b == PolyQ(1) &&
        inv.v == PolyQ(1) + t * t))
    return false;

  ThresholdReport report = obstruction_thresholds(
      inv, constants_for(2), RootDomain::AllReals, r(1, 1000000000));
  if (report.breakpoints.size() != 3 || report.regions.size() != 4)
    return false;

  // ObstructedApte exactly for t != 0.
  const ThresholdBreakpoint& origin = report.breakpoints[1];
  if (!origin.where.exact || !(*origin.where.exact == r(0))) return false;
  if (origin.kaehler != KaehlerVerdict::NotObstructed) return false;
  for (const auto& region : report.regions)
    if (region.kaehler != KaehlerVerdict::ObstructedApte) return false;
  for (std::size_t i : {std::size_t{0}, std::size_t{2}})
    if (report.breakpoints[i].kaehler != KaehlerVerdict::ObstructedApte)
      return false;

  // ObstructedIneq1 exactly for |t| >= sqrt(5)/2.
  if (report.regions.front().einstein != EinsteinVerdict::ObstructedIneq1 ||
      report.regions.back().einstein != EinsteinVerdict::ObstructedIneq1 ||
      report.breakpoints.front().einstein !=
          EinsteinVerdict::ObstructedIneq1 ||
      report.breakpoints.back().einstein != EinsteinVerdict::ObstructedIneq1)
    return false;
  if (report.regions[1].einstein != EinsteinVerdict::NotObstructed ||
      report.regions[2].einstein != EinsteinVerdict::NotObstructed)
    return false;

  // Threshold isolated to width <= 1e-9 around sqrt(5)/2 = 1.118033988...
  const IsolatingInterval& iv = report.breakpoints.back().where;
  if (iv.width() > r(1, 1000000000)) return false;
  if (!(iv.lo < r(11180339888, 10000000000) &&
        iv.hi > r(11180339887, 10000000000)))
    return false;

  auto window = einstein_constant_window(evaluate_at(inv, r(1)),
                                         constants_for(2));
  return window && window->lo == r(-3) && window->hi == r(-2);
}

bool base_point_property() {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(0, 6);
  std::uniform_int_distribution<int> n_dist(2, 9);
  for (int trial = 0; trial < 200; ++trial) {
    int n = n_dist(rng);
    std::vector<Rational> J(n / 2 + 1);
    J[0] = r(d(rng) + 1, d(rng) + 1);
    for (std::size_t l = 1; l < J.size(); ++l) J[l] = r(d(rng), d(rng) + 1);
    SymplecticInvariants base =
        evaluate_at(twist_invariants(TwistFamilySpec{n, J}), r(0));
    if (!(base.b * base.v == base.a * base.a)) return false;
  }
  return true;
}

bool scale_invariance() {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-40, 40);
  std::uniform_int_distribution<int> pos(1, 40);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + pos(rng) % 8;
    Constants c = constants_for(n);
    SymplecticInvariants x{n, r(pos(rng), pos(rng)), r(d(rng), pos(rng)),
                           r(d(rng), pos(rng))};
    Rational lambda = r(pos(rng), pos(rng));
    SymplecticInvariants y{n, x.v * lambda.pow(n),
                           x.a * lambda.pow(n - 1), x.b * lambda.pow(n - 2)};
    if (check_einstein_obstruction(x, c) != check_einstein_obstruction(y, c))
      return false;
    if (check_kaehler_obstruction(x) != check_kaehler_obstruction(y))
      return false;
  }
  return true;
}

bool implication_on_sweeps() {
  auto ineq1_implies_apte = [](const ThresholdReport& report) {
    for (const auto& region : report.regions)
      if (region.einstein == EinsteinVerdict::ObstructedIneq1 &&
          region.kaehler != KaehlerVerdict::ObstructedApte)
        return false;
    for (const auto& bp : report.breakpoints)
      if (bp.einstein == EinsteinVerdict::ObstructedIneq1 &&
          bp.kaehler != KaehlerVerdict::ObstructedApte)
        return false;
    return true;
  };
  const Rational width = r(1, 1000000);
  for (const auto& cell : twist_sweep(4, 12)) {
    ThresholdReport report =
        obstruction_thresholds(cell.invariants, constants_for(cell.n),
                               RootDomain::AllReals, width);
    if (!ineq1_implies_apte(report)) return false;
  }
  for (const auto& cell : product_sweep(2, 8, 2, 8)) {
    ThresholdReport report = obstruction_thresholds(
        cell.invariants, constants_for(cell.n1 + cell.n2),
        RootDomain::PositiveOnly, width);
    if (!ineq1_implies_apte(report)) return false;
  }
  return true;
}

}  // namespace

int main() {
  report(1, "constants table", constants_table());
  report(2, "wedge identity suite", wedge_identity_suite());
  report(3, "Hodge-Riemann suite", hodge_riemann_suite());
  report(4, "Lorentz signature", lorentz_signature());
  report(5, "twist asymptotics", twist_asymptotics());
  std::string note;
  report(6, "product asymptotics", product_asymptotics(note), note);
  report(7, "worked example", worked_example());
  report(8, "Kaehler base point", base_point_property());
  report(9, "scale invariance", scale_invariance());
  report(10, "Ineq1 implies Apte on sweeps", implication_on_sweeps());
  return failures;
}
