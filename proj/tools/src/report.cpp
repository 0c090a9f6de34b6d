#include "report.hpp"

namespace ddk::cli {

using nlohmann::json;

const char* to_string(Kind k) { return k == Kind::asserted ? "asserted" : "measured"; }

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "fail";
}

std::string clip(const std::string& s, std::size_t limit) {
  if (s.size() <= limit) return s;
  return s.substr(0, limit) + " ...(" + std::to_string(s.size() - limit) + " more chars)";
}

Summary ReportDocument::summary() const {
  Summary out;
  for (const auto& r : reports) {
    if (r.status == Status::skipped) {
      ++out.skipped;
      continue;
    }
    if (r.kind == Kind::measured) {
      ++out.measured;
      if (r.status == Status::fail) ++out.measured_nonzero;
      continue;
    }
    ++out.asserted;
    if (r.status == Status::pass) ++out.passed;
    else ++out.failed;
  }
  return out;
}

int ReportDocument::exit_code() const { return summary().failed == 0 ? 0 : 1; }

json ReportDocument::to_json() const {
  json reps = json::array();
  for (const auto& r : reports) {
    json j{{"name", r.name},     {"suite", r.suite},       {"kind", to_string(r.kind)},
           {"status", to_string(r.status)}, {"path", r.path}, {"residual", clip(r.residual)},
           {"trials", r.trials}, {"trials_passed", r.trials_passed}, {"seconds", r.seconds}};
    if (r.samples) j["samples"] = *r.samples;
    if (r.seed) j["seed"] = *r.seed;
    if (!r.witness.empty()) j["witness"] = clip(r.witness);
    if (!r.note.empty()) j["note"] = r.note;
    if (!r.details.is_null()) j["details"] = r.details;
    reps.push_back(std::move(j));
  }
  json suites_json = json::array();
  for (const auto& s : suites) suites_json.push_back({{"name", s.name}, {"seconds", s.seconds}});
  const Summary s = summary();
  return json{
      {"tool", "ddk"},
      {"version", kToolVersion},
      {"config", config},
      {"conventions",
       {{"damping", "operators act on p(x) exp(-|x|^2); reports show the polynomial part p"},
        {"inner_product", "<f,g> = int_V f conj(g) delta_k(x) exp(-2|x|^2) dx"},
        {"exact_values", "c*pi^(m/2) with c in Q(i, sqrt 2, sqrt 3, ...)"},
        {"monte_carlo",
         "orthonormal coordinates t ~ N(0,1/4), estimate scaled by (pi/2)^(n/2); pass when within 4 standard errors"}}},
      {"reports", reps},
      {"summary",
       {{"asserted", s.asserted},
        {"passed", s.passed},
        {"failed", s.failed},
        {"measured", s.measured},
        {"measured_nonzero", s.measured_nonzero},
        {"skipped", s.skipped}}},
      {"suites", suites_json},
      {"exit_code", exit_code()},
  };
}

json report_schema() {
  const json count = {{"type", "integer"}, {"minimum", 0}};
  const json report = {
      {"type", "object"},
      {"required", {"name", "suite", "kind", "status", "path", "residual", "trials", "trials_passed", "seconds"}},
      {"additionalProperties", false},
      {"properties",
       {{"name", {{"type", "string"}, {"minLength", 1}}},
        {"suite",
         {{"enum", {"commutativity", "adjoint", "skew", "square", "crosscheck", "equivariance", "clifford"}}}},
        {"kind", {{"enum", {"asserted", "measured"}}}},
        {"status", {{"enum", {"pass", "fail", "skipped"}}}},
        {"path", {{"enum", {"symbolic", "exact", "mc"}}}},
        {"residual", {{"type", "string"}}},
        {"trials", count},
        {"trials_passed", count},
        {"samples", count},
        {"seed", count},
        {"witness", {{"type", "string"}}},
        {"note", {{"type", "string"}}},
        {"details", {{"type", "object"}}},
        {"seconds", {{"type", "number"}, {"minimum", 0}}}}}};
  return json{
      {"$schema", "http://json-schema.org/draft-07/schema#"},
      {"$id", std::string("ddk-report-") + kToolVersion},
      {"title", "ddk verification report"},
      {"type", "object"},
      {"required", {"tool", "version", "config", "conventions", "reports", "summary", "suites", "exit_code"}},
      {"additionalProperties", false},
      {"properties",
       {{"tool", {{"const", "ddk"}}},
        {"version", {{"const", kToolVersion}}},
        {"config",
         {{"type", "object"},
          {"required", {"group", "k", "rep", "suites", "seed", "mc_samples", "degree_cap", "trials"}},
          {"properties",
           {{"group", {{"type", "string"}, {"pattern", "^A[1-6]$"}}},
            {"k", {{"type", "string"}}},
            {"rep", {{"enum", {"trivial", "sign", "irrep2d", "permutation"}}}},
            {"suites", {{"type", "array"}, {"items", {{"type", "string"}}}}},
            {"seed", count},
            {"mc_samples", count},
            {"degree_cap", count},
            {"trials", count}}}}},
        {"conventions", {{"type", "object"}, {"additionalProperties", {{"type", "string"}}}}},
        {"reports", {{"type", "array"}, {"items", report}}},
        {"summary",
         {{"type", "object"},
          {"required", {"asserted", "passed", "failed", "measured", "measured_nonzero", "skipped"}},
          {"additionalProperties", false},
          {"properties",
           {{"asserted", count},
            {"passed", count},
            {"failed", count},
            {"measured", count},
            {"measured_nonzero", count},
            {"skipped", count}}}}},
        {"suites",
         {{"type", "array"},
          {"items",
           {{"type", "object"},
            {"required", {"name", "seconds"}},
            {"properties", {{"name", {{"type", "string"}}}, {"seconds", {{"type", "number"}, {"minimum", 0}}}}}}}}},
        {"exit_code", {{"enum", {0, 1}}}}}}};
}

}  // namespace ddk::cli
