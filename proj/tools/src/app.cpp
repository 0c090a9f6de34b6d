#include "app.hpp"

#include "apply.hpp"
#include "report.hpp"
#include "verify.hpp"

#include "ddk/parse.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace ddk::cli {

namespace {

void print_parse_error(std::ostream& err, const ParseError& e, const std::string& input) {
  err << "error: " << e.what() << '\n';
  err << "  " << input << '\n';
  err << "  " << std::string(std::min(e.position(), input.size()), ' ') << "^\n";
}

int verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto doc = run_verify(cfg);
  const std::string text = doc.to_json().dump(2) + "\n";
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) throw UsageError("--out: cannot open '" + cfg.out + "' for writing");
    f << text;
  }
  for (const auto& r : doc.reports)
    if (r.status == Status::fail)
      err << (r.kind == Kind::asserted ? "FAIL " : "MEASURED NONZERO ") << r.suite << ": " << r.name << '\n';
  const auto s = doc.summary();
  err << "asserted " << s.asserted << ", passed " << s.passed << ", failed " << s.failed << ", measured "
      << s.measured << " (" << s.measured_nonzero << " nonzero), skipped " << s.skipped << '\n';
  return doc.exit_code();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Dunkl, Dirac-Dunkl and Calogero-type operator identities", "ddk"};
  app.set_version_flag("--version", kToolVersion);
  app.set_config("--config", "", "key=value configuration file; command-line flags take precedence");
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--group", cfg.group, "root system A1..A6")->capture_default_str();
  app.add_option("--k", cfg.k, "rational multiplicity, e.g. 1/2")->capture_default_str();
  app.add_option("--rep", cfg.rep, "trivial, sign, irrep2d (A2) or permutation")->capture_default_str();
  app.add_option("--suite", cfg.suites, "comma-separated suites or `all`")->delimiter(',')->capture_default_str();
  app.add_option("--seed", cfg.seed, "run seed")->capture_default_str();
  app.add_option("--mc-samples", cfg.mc_samples, "Monte Carlo samples per integral")->capture_default_str();
  app.add_option("--out", cfg.out, "report file (default: stdout)");
  app.add_option("--degree-cap", cfg.degree_cap, "maximum degree of random inputs")->capture_default_str();
  app.add_option("--trials", cfg.trials, "random trials per check")->capture_default_str();
  app.add_option("--exhaustive-rank", cfg.exhaustive_rank, "largest rank whose group is enumerated exhaustively")
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "worker threads (0: all cores)")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites and write a JSON report");
  verify_cmd->fallthrough();

  std::string op, expr, xi;
  auto* apply_cmd = app.add_subcommand("apply", "apply an operator to a polynomial or ';'-separated field");
  apply_cmd->fallthrough();
  apply_cmd->add_option("operator", op, "derivative, dunkl, drift, twisted-dunkl, laplacian or dirac")->required();
  apply_cmd->add_option("expr", expr, "input, e.g. `2*x1^2*x2 - sqrt(3)/2*x3`")->required();
  apply_cmd->add_option("--xi", xi, "direction as comma-separated scalars (default e1 - e2, or 1 on A1)");

  auto* schema_cmd = app.add_subcommand("schema", "print the JSON schema of verify reports");
  schema_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*schema_cmd) {
      out << report_schema().dump(2) << '\n';
      return 0;
    }
    if (*apply_cmd) {
      out << run_apply(cfg, op, expr, xi) << '\n';
      return 0;
    }
    return verify(cfg, out, err);
  } catch (const ParseError& e) {
    print_parse_error(err, e, expr);
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace ddk::cli
