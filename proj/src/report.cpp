#include "sympchern/report.hpp"

#include "sympchern/errors.hpp"

namespace sympchern {

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a rational string");
  return Rational::parse(j.get<std::string>());
}

Json polynomial_to_json(const PolyQ& p) {
  Json coeffs = Json::array();
  for (const Rational& c : p.coeffs()) coeffs.push_back(rational_to_json(c));
  return Json{{"coeffs", coeffs}, {"str", p.str()}};
}

PolyQ polynomial_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const Json& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  return PolyQ(std::move(coeffs));
}

Json limit_to_json(const LimitValue& limit) {
  switch (limit.kind) {
    case LimitValue::Kind::PlusInfinity:
      return Json{{"kind", "+inf"}};
    case LimitValue::Kind::MinusInfinity:
      return Json{{"kind", "-inf"}};
    default:
      return Json{{"kind", "finite"},
                  {"value", rational_to_json(limit.value)}};
  }
}

LimitValue limit_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "+inf") return LimitValue::plus_infinity();
  if (kind == "-inf") return LimitValue::minus_infinity();
  if (kind == "finite")
    return LimitValue::finite(rational_from_json(j.at("value")));
  throw ParseError("unknown limit kind '" + kind + "'");
}

std::string show_rational(const Rational& r, int digits) {
  return r.decimal(digits) + " (" + r.str() + ")";
}

namespace {

Json constants_to_json(const Constants& constants, bool lebrun_k2) {
  return Json{{"k1", rational_to_json(constants.k1)},
              {"k2", rational_to_json(constants.k2)},
              {"scalar_bound", rational_to_json(constants.scalar_bound)},
              {"lebrun_k2", lebrun_k2}};
}

Json verdict_to_json(const Verdict& verdict) {
  return Json{{"einstein", to_string(verdict.einstein)},
              {"kaehler", to_string(verdict.kaehler)},
              {"details",
               Json{{"bv", rational_to_json(verdict.details.bv)},
                    {"a_sq", rational_to_json(verdict.details.a_sq)},
                    {"k1_a_sq", rational_to_json(verdict.details.k1_a_sq)},
                    {"k2_a_sq", rational_to_json(verdict.details.k2_a_sq)}}}};
}

std::string domain_name(RootDomain domain) {
  switch (domain) {
    case RootDomain::PositiveOnly: return "t > 0";
    case RootDomain::NegativeOnly: return "t < 0";
    default: return "all t";
  }
}

Json region_to_json(const ThresholdRegion& region) {
  return Json{{"sample", rational_to_json(region.sample)},
              {"sign_p1", region.sign_p1},
              {"sign_p2", region.sign_p2},
              {"sign_p9", region.sign_p9},
              {"sign_a", region.sign_a},
              {"einstein", to_string(region.einstein)},
              {"kaehler", to_string(region.kaehler)}};
}

Json breakpoint_to_json(const ThresholdBreakpoint& bp) {
  Json where{{"lo", rational_to_json(bp.where.lo)},
             {"hi", rational_to_json(bp.where.hi)},
             {"polynomial", polynomial_to_json(bp.where.polynomial)}};
  if (bp.where.exact) where["exact"] = rational_to_json(*bp.where.exact);
  return Json{{"where", where},
              {"sign_p1", bp.sign_p1},
              {"sign_p2", bp.sign_p2},
              {"sign_p9", bp.sign_p9},
              {"sign_a", bp.sign_a},
              {"einstein", to_string(bp.einstein)},
              {"kaehler", to_string(bp.kaehler)}};
}

Json thresholds_to_json(const ThresholdReport& report) {
  Json breakpoints = Json::array();
  for (const auto& bp : report.breakpoints)
    breakpoints.push_back(breakpoint_to_json(bp));
  Json regions = Json::array();
  for (const auto& region : report.regions)
    regions.push_back(region_to_json(region));
  return Json{{"domain", domain_name(report.domain)},
              {"p1", polynomial_to_json(report.p1)},
              {"p2", polynomial_to_json(report.p2)},
              {"p9", polynomial_to_json(report.p9)},
              {"breakpoints", breakpoints},
              {"regions", regions}};
}

}  // namespace

Json check_report(const SymplecticInvariants& inv, const Constants& constants,
                  bool lebrun_k2) {
  Verdict verdict = check_obstructions(inv, constants);
  Json report{{"report", "check"},
              {"input",
               Json{{"n", inv.n},
                    {"v", rational_to_json(inv.v)},
                    {"a", rational_to_json(inv.a)},
                    {"b", rational_to_json(inv.b)}}},
              {"constants", constants_to_json(constants, lebrun_k2)},
              {"verdict", verdict_to_json(verdict)}};
  if (auto window = einstein_constant_window(inv, constants))
    report["einstein_window"] = Json{{"lo", rational_to_json(window->lo)},
                                     {"hi", rational_to_json(window->hi)}};
  return report;
}

Json family_report(JobMode mode, const FamilyInvariants& inv,
                   const Constants& constants, bool lebrun_k2,
                   const Rational& refine_width) {
  const RootDomain domain = mode == JobMode::Product
                                ? RootDomain::PositiveOnly
                                : RootDomain::AllReals;
  LimitValue limit = ratio_limit(inv, LimitDirection::PlusInfinity);
  ThresholdReport thresholds =
      obstruction_thresholds(inv, constants, domain, refine_width);
  return Json{{"report", to_string(mode)},
              {"n", inv.n},
              {"polynomials",
               Json{{"v", polynomial_to_json(inv.v)},
                    {"a", polynomial_to_json(inv.a)},
                    {"b", polynomial_to_json(inv.b)}}},
              {"constants", constants_to_json(constants, lebrun_k2)},
              {"limit", limit_to_json(limit)},
              {"asymptotic_verdict",
               to_string(verdict_from_limit(limit, constants))},
              {"thresholds", thresholds_to_json(thresholds)}};
}

Json oracle_report(const OracleSuiteResult& result) {
  Json report{{"report", "verify-oracle"},
              {"n", result.n},
              {"samples", result.samples},
              {"identity6", result.identity6_ok},
              {"identity7", result.identity7_ok},
              {"hodge_riemann", result.hodge_riemann_ok},
              {"decomposition", result.decomposition_ok},
              {"signature",
               Json::array({result.signature.positives,
                            result.signature.negatives,
                            result.signature.zeros})},
              {"signature_ok", result.signature_ok},
              {"all_ok", result.all_ok()}};
  if (!result.counterexample.empty())
    report["counterexample"] = result.counterexample;
  return report;
}

Json twist_sweep_report(const std::vector<TwistSweepCell>& cells) {
  Json rows = Json::array();
  for (const auto& cell : cells)
    rows.push_back(Json{{"n", cell.n},
                        {"k", cell.k},
                        {"limit", limit_to_json(cell.limit)},
                        {"expected", limit_to_json(cell.expected)},
                        {"verdict", to_string(cell.verdict)},
                        {"condition", cell.condition},
                        {"consistent", cell.consistent}});
  return Json{{"report", "sweep"}, {"family", "twist"}, {"cells", rows}};
}

Json product_sweep_report(const std::vector<ProductSweepCell>& cells) {
  Json rows = Json::array();
  for (const auto& cell : cells)
    rows.push_back(Json{{"n1", cell.n1},
                        {"n2", cell.n2},
                        {"limit", limit_to_json(cell.limit)},
                        {"expected", limit_to_json(cell.expected)},
                        {"verdict", to_string(cell.verdict)},
                        {"condition", cell.condition},
                        {"consistent", cell.consistent},
                        {"swap_consistent", cell.swap_consistent}});
  return Json{{"report", "sweep"}, {"family", "product"}, {"cells", rows}};
}

namespace {

std::string show(const Json& rational) {
  return show_rational(rational_from_json(rational));
}

std::string show_limit(const Json& limit) {
  const std::string kind = limit.at("kind").get<std::string>();
  return kind == "finite" ? show(limit.at("value")) : kind;
}

void render_signs(std::ostream& out, const Json& row) {
  out << "  signs: k1*a^2-b*v " << row.at("sign_p1").get<int>()
      << ", b*v-k2*a^2 " << row.at("sign_p2").get<int>() << ", b*v-a^2 "
      << row.at("sign_p9").get<int>() << ", a " << row.at("sign_a").get<int>()
      << "\n";
  out << "  einstein: " << row.at("einstein").get<std::string>()
      << "   kaehler: " << row.at("kaehler").get<std::string>() << "\n";
}

void render_thresholds(std::ostream& out, const Json& thresholds) {
  out << "threshold table over " << thresholds.at("domain").get<std::string>()
      << "\n";
  out << "  p1 = k1*a^2 - b*v = "
      << thresholds.at("p1").at("str").get<std::string>() << "\n";
  out << "  p2 = b*v - k2*a^2 = "
      << thresholds.at("p2").at("str").get<std::string>() << "\n";
  out << "  p9 = b*v - a^2    = "
      << thresholds.at("p9").at("str").get<std::string>() << "\n";
  const Json& regions = thresholds.at("regions");
  const Json& breakpoints = thresholds.at("breakpoints");
  for (std::size_t i = 0; i < regions.size(); ++i) {
    out << "region with sample t = " << show(regions[i].at("sample")) << "\n";
    render_signs(out, regions[i]);
    if (i < breakpoints.size()) {
      const Json& where = breakpoints[i].at("where");
      out << "breakpoint: root of "
          << where.at("polynomial").at("str").get<std::string>() << " in ["
          << rational_from_json(where.at("lo")).decimal(12) << ", "
          << rational_from_json(where.at("hi")).decimal(12) << "]"
          << " (exact bounds " << where.at("lo").get<std::string>() << ", "
          << where.at("hi").get<std::string>() << ")";
      if (where.contains("exact"))
        out << ", root = " << show(where.at("exact"));
      out << "\n";
      render_signs(out, breakpoints[i]);
    }
  }
}

void render_check(std::ostream& out, const Json& report) {
  const Json& input = report.at("input");
  const Json& constants = report.at("constants");
  const Json& verdict = report.at("verdict");
  const Json& details = verdict.at("details");
  out << "symplectic invariants (n = " << input.at("n").get<int>() << ")\n";
  out << "  v = " << show(input.at("v")) << "\n";
  out << "  a = " << show(input.at("a")) << "\n";
  out << "  b = " << show(input.at("b")) << "\n";
  out << "constants: k1 = " << show(constants.at("k1"))
      << ", k2 = " << show(constants.at("k2")) << "\n";
  out << "  b*v = " << show(details.at("bv"))
      << "   a^2 = " << show(details.at("a_sq")) << "\n";
  out << "  k1*a^2 = " << show(details.at("k1_a_sq"))
      << "   k2*a^2 = " << show(details.at("k2_a_sq")) << "\n";
  out << "einstein: " << verdict.at("einstein").get<std::string>() << "\n";
  out << "kaehler:  " << verdict.at("kaehler").get<std::string>() << "\n";
  if (report.contains("einstein_window")) {
    const Json& window = report.at("einstein_window");
    out << "non-Kaehler Einstein scalar curvature window: s/pi in ["
        << show(window.at("lo")) << ", " << show(window.at("hi")) << ")\n";
  }
}

void render_family(std::ostream& out, const Json& report) {
  const Json& polys = report.at("polynomials");
  out << report.at("report").get<std::string>()
      << " family (n = " << report.at("n").get<int>() << ")\n";
  out << "  v(t) = " << polys.at("v").at("str").get<std::string>() << "\n";
  out << "  a(t) = " << polys.at("a").at("str").get<std::string>() << "\n";
  out << "  b(t) = " << polys.at("b").at("str").get<std::string>() << "\n";
  out << "limit of b*v/a^2 at +infinity: " << show_limit(report.at("limit"))
      << "\n";
  out << "asymptotic verdict: "
      << report.at("asymptotic_verdict").get<std::string>() << "\n";
  render_thresholds(out, report.at("thresholds"));
}

void render_oracle(std::ostream& out, const Json& report) {
  auto line = [&](const char* label, const char* key) {
    out << "  " << label << ": "
        << (report.at(key).get<bool>() ? "pass" : "FAIL") << "\n";
  };
  out << "exterior algebra verification (n = " << report.at("n").get<int>()
      << ", " << report.at("samples").get<int>() << " samples)\n";
  line("wedge identity (trace form)", "identity6");
  line("wedge identity (norm form)", "identity7");
  line("Hodge-Riemann positivity", "hodge_riemann");
  line("type decomposition orthogonality", "decomposition");
  const Json& sig = report.at("signature");
  out << "  pairing signature: (" << sig[0].get<int>() << ", "
      << sig[1].get<int>() << ", " << sig[2].get<int>() << ") "
      << (report.at("signature_ok").get<bool>() ? "pass" : "FAIL") << "\n";
  if (report.contains("counterexample"))
    out << "  counterexample: "
        << report.at("counterexample").get<std::string>() << "\n";
  out << (report.at("all_ok").get<bool>() ? "all identities hold\n"
                                          : "VERIFICATION FAILED\n");
}

void render_sweep(std::ostream& out, const Json& report) {
  const std::string family = report.at("family").get<std::string>();
  out << family << " family sweep\n";
  for (const Json& cell : report.at("cells")) {
    if (family == "twist")
      out << "  n = " << cell.at("n").get<int>()
          << ", k = " << cell.at("k").get<int>();
    else
      out << "  n1 = " << cell.at("n1").get<int>()
          << ", n2 = " << cell.at("n2").get<int>();
    out << ": L = " << show_limit(cell.at("limit")) << ", verdict "
        << cell.at("verdict").get<std::string>() << ", condition "
        << (cell.at("condition").get<bool>() ? "holds" : "fails")
        << (cell.at("consistent").get<bool>() ? "" : "  INCONSISTENT");
    if (cell.contains("swap_consistent") &&
        !cell.at("swap_consistent").get<bool>())
      out << "  SWAP-INCONSISTENT";
    out << "\n";
  }
}

}  // namespace

void render_text(std::ostream& out, const Json& report) {
  const std::string kind = report.at("report").get<std::string>();
  if (kind == "check")
    render_check(out, report);
  else if (kind == "twist" || kind == "product")
    render_family(out, report);
  else if (kind == "verify-oracle")
    render_oracle(out, report);
  else if (kind == "sweep")
    render_sweep(out, report);
  else
    throw InternalError("unknown report kind '" + kind + "'");
}

void write_family_csv(std::ostream& out, const FamilyInvariants& inv,
                      const Rational& t_min, const Rational& t_max,
                      int steps) {
  if (steps < 1) throw InvalidSpec("csv sampling needs steps >= 1");
  if (t_max < t_min) throw InvalidSpec("csv sampling needs t-min <= t-max");
  out << "t,v,a,b,ratio\n";
  const Rational step = (t_max - t_min) / Rational(steps);
  for (int i = 0; i <= steps; ++i) {
    const Rational t = t_min + Rational(i) * step;
    const SymplecticInvariants at = evaluate_at(inv, t);
    out << t.decimal(9) << "," << at.v.decimal(9) << "," << at.a.decimal(9)
        << "," << at.b.decimal(9) << ",";
    if (at.a.is_zero())
      out << ((at.b * at.v).is_zero() ? "nan" : "inf");
    else
      out << ((at.b * at.v) / (at.a * at.a)).decimal(9);
    out << "\n";
  }
}

}  // namespace sympchern
