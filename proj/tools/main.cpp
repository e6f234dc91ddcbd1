#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <tuple>

#include "CLI11.hpp"
#include "sympchern/errors.hpp"
#include "sympchern/jobio.hpp"
#include "sympchern/report.hpp"

namespace {

using namespace sympchern;

struct Options {
  std::string input;
  std::string format = "text";
  std::string csv_path;
  std::string t_min = "0";
  std::string t_max = "10";
  int steps = 100;
  std::string refine_width = "1/1000000000";
  bool lebrun_k2 = false;
  bool allow_large_n = false;
};

void emit(const Json& report, const Options& opts) {
  if (opts.format == "text")
    render_text(std::cout, report);
  else
    std::cout << report.dump(2) << "\n";
}

JobSpec load_job(const Options& opts, JobMode expected) {
  JobSpec job = parse_job_file(opts.input);
  if (job.mode != expected)
    throw InvalidSpec("job file has mode '" + to_string(job.mode) +
                      "' but the subcommand expects '" + to_string(expected) +
                      "'");
  return job;
}

void run_check(const Options& opts) {
  JobSpec job = load_job(opts, JobMode::Check);
  const Constants constants = constants_for(job.check->n, opts.lebrun_k2);
  emit(check_report(*job.check, constants, opts.lebrun_k2), opts);
}

void run_family(const Options& opts, JobMode mode) {
  JobSpec job = load_job(opts, mode);
  FamilyInvariants inv = mode == JobMode::Twist
                             ? twist_invariants(*job.twist)
                             : product_invariants(*job.product);
  const Constants constants = constants_for(inv.n, opts.lebrun_k2);
  const Rational width = Rational::parse(opts.refine_width);
  if (width.sign() <= 0) throw InvalidSpec("refine width must be positive");
  emit(family_report(mode, inv, constants, opts.lebrun_k2, width), opts);
  if (!opts.csv_path.empty()) {
    std::ofstream csv(opts.csv_path);
    if (!csv)
      throw InvalidSpec("cannot open csv output file '" + opts.csv_path + "'");
    write_family_csv(csv, inv, Rational::parse(opts.t_min),
                     Rational::parse(opts.t_max), opts.steps);
  }
}

void run_verify_oracle(const Options& opts) {
  JobSpec job = load_job(opts, JobMode::VerifyOracle);
  if (job.oracle->n > 6 && !opts.allow_large_n)
    throw DimensionTooLarge(
        "verification above n = 6 is expensive; pass --allow-large-n to run "
        "it anyway");
  OracleSuiteResult result =
      run_oracle_suite(job.oracle->n, job.oracle->samples, job.oracle->seed);
  emit(oracle_report(result), opts);
  if (!result.all_ok()) throw InternalError("exterior identity suite failed");
}

void run_sweep(const Options& opts) {
  JobSpec job = load_job(opts, JobMode::Sweep);
  const SweepJob& sweep = *job.sweep;
  if (sweep.family == SweepFamily::Twist)
    emit(twist_sweep_report(twist_sweep(sweep.n_min, sweep.n_max)), opts);
  else
    emit(product_sweep_report(product_sweep(sweep.n1_min, sweep.n1_max,
                                            sweep.n2_min, sweep.n2_max)),
         opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Chern-number obstructions to compatible Einstein and Kaehler "
      "metrics on symplectic manifolds"};
  app.require_subcommand(1);

  Options opts;
  JobMode mode = JobMode::Check;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--input", opts.input, "Job file")->required();
    cmd->add_option("--format", opts.format, "Report format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
  };

  auto* check = app.add_subcommand("check",
                                   "Verdict for one set of exact invariants");
  add_common(check);
  check->add_flag("--lebrun-k2", opts.lebrun_k2,
                  "Use the sharper dimension-4 constant k2 = 3/4");
  check->callback([&] { mode = JobMode::Check; });

  for (auto [name, m, help] :
       {std::tuple{"twist", JobMode::Twist,
                   "Holomorphic twist family: polynomials, limit, thresholds"},
        std::tuple{"product", JobMode::Product,
                   "Product family: polynomials, limit, thresholds"}}) {
    auto* cmd = app.add_subcommand(name, help);
    add_common(cmd);
    cmd->add_flag("--lebrun-k2", opts.lebrun_k2,
                  "Use the sharper dimension-4 constant k2 = 3/4");
    cmd->add_option("--refine-width", opts.refine_width,
                    "Isolating interval width (exact rational)")
        ->capture_default_str();
    cmd->add_option("--csv", opts.csv_path, "Write (t,v,a,b,ratio) samples");
    cmd->add_option("--t-min", opts.t_min, "CSV range start")
        ->capture_default_str();
    cmd->add_option("--t-max", opts.t_max, "CSV range end")
        ->capture_default_str();
    cmd->add_option("--steps", opts.steps, "CSV sample intervals")
        ->capture_default_str();
    cmd->callback([&, m = m] { mode = m; });
  }

  auto* verify = app.add_subcommand(
      "verify-oracle", "Randomized exact exterior-algebra identity suite");
  add_common(verify);
  verify->add_flag("--allow-large-n", opts.allow_large_n,
                   "Permit model spaces above n = 6");
  verify->callback([&] { mode = JobMode::VerifyOracle; });

  auto* sweep = app.add_subcommand(
      "sweep", "Family grids: limits, verdicts and the equivalence table");
  add_common(sweep);
  sweep->callback([&] { mode = JobMode::Sweep; });

  CLI11_PARSE(app, argc, argv);

  try {
    switch (mode) {
      case JobMode::Check: run_check(opts); break;
      case JobMode::Twist: run_family(opts, JobMode::Twist); break;
      case JobMode::Product: run_family(opts, JobMode::Product); break;
      case JobMode::VerifyOracle: run_verify_oracle(opts); break;
      case JobMode::Sweep: run_sweep(opts); break;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
