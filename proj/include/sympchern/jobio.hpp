#pragma once

#include <istream>
#include <optional>
#include <string>

#include "sympchern/families.hpp"
#include "sympchern/invariants.hpp"

namespace sympchern {

enum class JobMode { Check, Twist, Product, VerifyOracle, Sweep };

JobMode job_mode_from_string(const std::string& s);
std::string to_string(JobMode mode);

struct OracleJob {
  int n = 2;
  int samples = 100;
  unsigned seed = 1;
};

enum class SweepFamily { Twist, Product };

struct SweepJob {
  SweepFamily family = SweepFamily::Twist;
  int n_min = 4;
  int n_max = 12;
  int n1_min = 2;
  int n1_max = 8;
  int n2_min = 2;
  int n2_max = 8;
};

/// One parsed job file. Exactly one payload is set, matching `mode`.
struct JobSpec {
  JobMode mode = JobMode::Check;
  std::optional<SymplecticInvariants> check;
  std::optional<TwistFamilySpec> twist;
  std::optional<ProductFamilySpec> product;
  std::optional<OracleJob> oracle;
  std::optional<SweepJob> sweep;
};

/// Parses a job document: one `key = value` pair per line, `#` comments,
/// blank lines ignored. All rationals are read exactly (integers,
/// fractions like 5/4, or terminating decimals like 0.25). Throws
/// ParseError with a line diagnostic on any malformed input.
JobSpec parse_job(std::istream& in);

/// Reads and parses the job file at `path`.
JobSpec parse_job_file(const std::string& path);

}  // namespace sympchern
