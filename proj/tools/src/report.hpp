#pragma once

// Verification reports: one OperatorReport per checked identity, gathered
// into a ReportDocument that serializes to JSON under a versioned schema.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ddk::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Kind { asserted, measured };
enum class Status { pass, fail, skipped };

const char* to_string(Kind k);
const char* to_string(Status s);

struct OperatorReport {
  std::string name;
  std::string suite;
  Kind kind = Kind::asserted;
  Status status = Status::pass;
  std::string path = "symbolic";  // symbolic | exact | mc
  std::string residual = "0";
  int trials = 0;
  int trials_passed = 0;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::string witness;
  std::string note;
  nlohmann::json details;  // null unless the check emits extra data
  double seconds = 0.0;
};

struct SuiteTiming {
  std::string name;
  double seconds = 0.0;
};

struct Summary {
  int asserted = 0;
  int passed = 0;
  int failed = 0;
  int measured = 0;
  int measured_nonzero = 0;
  int skipped = 0;
};

struct ReportDocument {
  nlohmann::json config;
  std::vector<OperatorReport> reports;
  std::vector<SuiteTiming> suites;

  Summary summary() const;
  /// 0 when every asserted identity passed, 1 otherwise.
  int exit_code() const;
  nlohmann::json to_json() const;
};

/// JSON Schema (draft-07) describing ReportDocument::to_json().
nlohmann::json report_schema();

/// Cuts long witnesses and residuals so reports stay readable.
std::string clip(const std::string& s, std::size_t limit = 4000);

}  // namespace ddk::cli
