#include "sympchern/jobio.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "sympchern/errors.hpp"

namespace sympchern {

JobMode job_mode_from_string(const std::string& s) {
  if (s == "check") return JobMode::Check;
  if (s == "twist") return JobMode::Twist;
  if (s == "product") return JobMode::Product;
  if (s == "verify-oracle") return JobMode::VerifyOracle;
  if (s == "sweep") return JobMode::Sweep;
  throw ParseError("unknown mode '" + s + "'");
}

std::string to_string(JobMode mode) {
  switch (mode) {
    case JobMode::Check: return "check";
    case JobMode::Twist: return "twist";
    case JobMode::Product: return "product";
    case JobMode::VerifyOracle: return "verify-oracle";
    default: return "sweep";
  }
}

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

struct Field {
  std::string value;
  int line;
};

class Fields {
 public:
  void insert(const std::string& key, const std::string& value, int line) {
    if (fields_.count(key))
      throw ParseError("line " + std::to_string(line) + ": duplicate key '" +
                       key + "'");
    fields_[key] = Field{value, line};
  }

  const Field& require(const std::string& key) const {
    auto it = fields_.find(key);
    if (it == fields_.end())
      throw ParseError("missing required key '" + key + "'");
    used_.insert(key);
    return it->second;
  }

  const Field* find(const std::string& key) const {
    auto it = fields_.find(key);
    if (it == fields_.end()) return nullptr;
    used_.insert(key);
    return &it->second;
  }

  void reject_unused() const {
    for (const auto& [key, field] : fields_)
      if (!used_.count(key))
        throw ParseError("line " + std::to_string(field.line) +
                         ": unexpected key '" + key + "'");
  }

 private:
  std::map<std::string, Field> fields_;
  mutable std::set<std::string> used_;
};

Rational parse_rational_field(const Field& f, const std::string& key) {
  try {
    return Rational::parse(f.value);
  } catch (const Error& e) {
    throw ParseError("line " + std::to_string(f.line) + ": field '" + key +
                     "': " + e.what());
  }
}

int parse_int_field(const Field& f, const std::string& key) {
  try {
    std::size_t pos = 0;
    int value = std::stoi(f.value, &pos);
    if (pos != f.value.size()) throw std::invalid_argument(f.value);
    return value;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(f.line) + ": field '" + key +
                     "' must be an integer, got '" + f.value + "'");
  }
}

std::vector<Rational> parse_rational_list(const Field& f,
                                          const std::string& key) {
  std::vector<Rational> values;
  std::stringstream ss(f.value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw ParseError("line " + std::to_string(f.line) + ": field '" + key +
                       "' has an empty list entry");
    values.push_back(parse_rational_field(Field{item, f.line}, key));
  }
  if (values.empty())
    throw ParseError("line " + std::to_string(f.line) + ": field '" + key +
                     "' must be a comma-separated list");
  return values;
}

}  // namespace

JobSpec parse_job(std::istream& in) {
  Fields fields;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'key = value', got '" + line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ParseError("line " + std::to_string(line_no) +
                       ": empty key or value");
    fields.insert(key, value, line_no);
  }

  JobSpec job;
  job.mode = job_mode_from_string(fields.require("mode").value);
  switch (job.mode) {
    case JobMode::Check: {
      SymplecticInvariants inv;
      inv.n = parse_int_field(fields.require("n"), "n");
      inv.v = parse_rational_field(fields.require("v"), "v");
      inv.a = parse_rational_field(fields.require("a"), "a");
      inv.b = parse_rational_field(fields.require("b"), "b");
      job.check = inv;
      break;
    }
    case JobMode::Twist: {
      TwistFamilySpec spec;
      spec.n = parse_int_field(fields.require("n"), "n");
      spec.J = parse_rational_list(fields.require("J"), "J");
      job.twist = spec;
      break;
    }
    case JobMode::Product: {
      ProductFamilySpec spec;
      spec.n1 = parse_int_field(fields.require("n1"), "n1");
      spec.n2 = parse_int_field(fields.require("n2"), "n2");
      spec.E = fields.find("E") ? parse_rational_field(*fields.find("E"), "E")
                                : Rational(1);
      job.product = spec;
      break;
    }
    case JobMode::VerifyOracle: {
      OracleJob oracle;
      oracle.n = parse_int_field(fields.require("n"), "n");
      if (const Field* f = fields.find("samples"))
        oracle.samples = parse_int_field(*f, "samples");
      if (const Field* f = fields.find("seed"))
        oracle.seed = static_cast<unsigned>(parse_int_field(*f, "seed"));
      if (oracle.samples <= 0) throw ParseError("samples must be positive");
      job.oracle = oracle;
      break;
    }
    case JobMode::Sweep: {
      SweepJob sweep;
      const std::string family = fields.require("family").value;
      if (family == "twist")
        sweep.family = SweepFamily::Twist;
      else if (family == "product")
        sweep.family = SweepFamily::Product;
      else
        throw ParseError("sweep family must be 'twist' or 'product', got '" +
                         family + "'");
      auto range = [&](const char* key, int fallback) {
        const Field* f = fields.find(key);
        return f ? parse_int_field(*f, key) : fallback;
      };
      if (sweep.family == SweepFamily::Twist) {
        sweep.n_min = range("n-min", sweep.n_min);
        sweep.n_max = range("n-max", sweep.n_max);
        if (sweep.n_min < 2 || sweep.n_max < sweep.n_min)
          throw ParseError("sweep needs 2 <= n-min <= n-max");
      } else {
        sweep.n1_min = range("n1-min", sweep.n1_min);
        sweep.n1_max = range("n1-max", sweep.n1_max);
        sweep.n2_min = range("n2-min", sweep.n2_min);
        sweep.n2_max = range("n2-max", sweep.n2_max);
        if (sweep.n1_min < 1 || sweep.n1_max < sweep.n1_min ||
            sweep.n2_min < 1 || sweep.n2_max < sweep.n2_min)
          throw ParseError("sweep needs 1 <= min <= max for n1 and n2");
      }
      job.sweep = sweep;
      break;
    }
  }
  fields.reject_unused();
  return job;
}

JobSpec parse_job_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open job file '" + path + "'");
  return parse_job(in);
}

}  // namespace sympchern
