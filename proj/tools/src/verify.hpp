#pragma once

// Verification suites behind `ddk verify`.

#include "report.hpp"

#include "ddk/reps.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ddk::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Bad flag or config value: exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string group = "A2";
  std::string k = "1";
  std::string rep = "trivial";
  std::vector<std::string> suites{"all"};
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t mc_samples = 1000000;
  std::string out;
  int degree_cap = 3;
  int trials = 10;
  int exhaustive_rank = 4;  // W enumerated for unitarity checks up to this rank
  unsigned jobs = 0;  // 0: hardware concurrency
};

const std::vector<std::string>& suite_names();

/// Parsed and checked configuration; throws UsageError.
struct Resolved {
  RootSystemPtr system;
  Rational k;
  Representation rho;
  std::vector<std::string> suites;  // canonical order, `all` expanded
};

/// `A1`..`A6`; throws UsageError.
RootSystemPtr parse_group(const std::string& selector);
/// Rational multiplicity; complex or irrational values are rejected.
Rational parse_multiplicity(const std::string& text);
Resolved resolve(const RunConfig& cfg);

nlohmann::json config_json(const RunConfig& cfg, const Resolved& r);

ReportDocument run_verify(const RunConfig& cfg);

}  // namespace ddk::cli
