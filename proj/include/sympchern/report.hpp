#pragma once

#include <ostream>
#include <string>

#include "json.hpp"
#include "sympchern/families.hpp"
#include "sympchern/invariants.hpp"
#include "sympchern/jobio.hpp"
#include "sympchern/oracle_suite.hpp"
#include "sympchern/sweeps.hpp"

namespace sympchern {

using Json = nlohmann::json;

/// Rationals cross the text boundary as exact "p/q" strings so structured
/// reports round-trip without precision loss.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json polynomial_to_json(const PolyQ& p);
PolyQ polynomial_from_json(const Json& j);

Json limit_to_json(const LimitValue& limit);
LimitValue limit_from_json(const Json& j);

/// "decimal (exact)" pairing used everywhere in text output.
std::string show_rational(const Rational& r, int digits = 6);

Json check_report(const SymplecticInvariants& inv, const Constants& constants,
                  bool lebrun_k2);
Json family_report(JobMode mode, const FamilyInvariants& inv,
                   const Constants& constants, bool lebrun_k2,
                   const Rational& refine_width);
Json oracle_report(const OracleSuiteResult& result);
Json twist_sweep_report(const std::vector<TwistSweepCell>& cells);
Json product_sweep_report(const std::vector<ProductSweepCell>& cells);

/// Human-readable rendering of any report produced above.
void render_text(std::ostream& out, const Json& report);

/// CSV of exact samples (t, v, a, b, b*v/a^2) on an even grid of `steps`
/// intervals from t_min to t_max, rendered as decimals at print time.
void write_family_csv(std::ostream& out, const FamilyInvariants& inv,
                      const Rational& t_min, const Rational& t_max,
                      int steps);

}  // namespace sympchern
