#include "app.hpp"
#include "report.hpp"
#include "verify.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ddk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = ddk::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string apply(std::vector<std::string> args) {
  args.insert(args.begin(), "apply");
  auto r = cli(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return r.out;
}

json strip_timing(json doc) {
  for (auto& r : doc["reports"]) r.erase("seconds");
  for (auto& s : doc["suites"]) s.erase("seconds");
  return doc;
}

const json* find_report(const json& doc, const std::string& prefix) {
  for (const auto& r : doc["reports"])
    if (r["name"].get<std::string>().rfind(prefix, 0) == 0) return &r;
  return nullptr;
}

}  // namespace

TEST(CliApply, Examples) {
  EXPECT_EQ(apply({"dunkl", "--group", "A1", "--k", "1", "x"}), "3\n");
  EXPECT_EQ(apply({"dunkl", "--group", "A1", "--k", "1", "x1"}), "3\n");
  EXPECT_EQ(apply({"dunkl", "--group", "A3", "--k", "5/2", "1"}), "0\n");
  EXPECT_EQ(apply({"twisted-dunkl", "--group", "A1", "--rep", "sign", "--k", "1", "1"}), "2/x1\n");
  EXPECT_EQ(apply({"derivative", "--group", "A2", "--xi", "1,0,-1", "x1*x3"}), "-x1 + x3\n");
  // Root-level flags may follow the subcommand or precede it.
  EXPECT_EQ(apply({"--group", "A1", "--k", "1/2", "dunkl", "x"}), "2\n");
}

TEST(CliApply, LaplacianAndDirac) {
  // Delta_k x1^2 on the line is 2 + 4k.
  EXPECT_EQ(apply({"laplacian", "--group", "A1", "--k", "1", "x^2"}), "6\n");
  // Flat Dirac on the line: e1 = diag(i, -i) on (x, 0).
  EXPECT_EQ(apply({"dirac", "--group", "A1", "--k", "0", "x; 0"}), "i; 0\n");
  auto r = cli({"apply", "dirac", "--group", "A1", "x"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("expects 2"), std::string::npos) << r.err;
}

TEST(CliApply, ParseErrorsReportPositions) {
  auto r = cli({"apply", "dunkl", "--group", "A2", "x1 + *x2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("position 5"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("\n       ^"), std::string::npos) << r.err;

  // Positions index the whole ';'-separated input.
  auto m = cli({"apply", "twisted-dunkl", "--group", "A2", "--rep", "irrep2d", "x1; x9"});
  EXPECT_EQ(m.code, 2);
  EXPECT_NE(m.err.find("position 4"), std::string::npos) << m.err;

  EXPECT_EQ(cli({"apply", "dunkl", "--group", "A2", "1/x1"}).code, 2);
  EXPECT_EQ(cli({"apply", "frobnicate", "x1"}).code, 2);
  EXPECT_EQ(cli({"apply", "dunkl", "--xi", "1,1,1", "x1"}).code, 2);
}

TEST(CliUsage, BadConfigExitsWithTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--group", "A7"},
           {"verify", "--group", "B2"},
           {"verify", "--k", "i"},
           {"verify", "--k", "sqrt(2)"},
           {"verify", "--k", "1/"},
           {"verify", "--rep", "adjoint"},
           {"verify", "--group", "A3", "--rep", "irrep2d"},
           {"verify", "--suite", "magic"},
           {"verify", "--degree-cap", "0"},
           {"verify", "--mc-samples", "1"},
           {"verify", "--no-such-flag"},
           {},
       }) {
    auto r = cli(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "(no args)" : args.back());
    EXPECT_FALSE(r.err.empty());
  }
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(CliSchema, VersionAndFields) {
  auto r = cli({"schema"});
  ASSERT_EQ(r.code, 0);
  auto schema = json::parse(r.out);
  EXPECT_EQ(schema["properties"]["version"]["const"], ddk::cli::kToolVersion);
  const auto& props = schema["properties"]["reports"]["items"]["properties"];
  for (const char* field : {"residual", "path", "witness", "kind", "status", "seconds"})
    EXPECT_TRUE(props.contains(field)) << field;
  EXPECT_EQ(cli({"--version"}).out, std::string(ddk::cli::kToolVersion) + "\n");
}

TEST(CliVerify, CrosscheckIrrepIsExactZero) {
  auto r = cli({"verify", "--group", "A2", "--k", "1", "--rep", "irrep2d", "--suite", "crosscheck"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto doc = json::parse(r.out);
  EXPECT_GE(doc["reports"].size(), 6u);
  for (const auto& rep : doc["reports"]) {
    EXPECT_EQ(rep["status"], "pass") << rep["name"];
    EXPECT_EQ(rep["residual"], "0");
  }
  EXPECT_EQ(doc["summary"]["failed"], 0);
  EXPECT_EQ(doc["exit_code"], 0);
}

TEST(CliVerify, DeterministicModuloTiming) {
  const std::vector<std::string> args{"verify", "--group", "A2", "--k", "1/2", "--rep", "sign",
                                      "--suite", "commutativity,crosscheck,equivariance,skew", "--mc-samples", "20000"};
  auto a = cli(args), b = cli(args);
  auto c_args = args;
  c_args.insert(c_args.end(), {"--jobs", "3"});
  auto c = cli(c_args);
  ASSERT_EQ(a.code, b.code);
  EXPECT_EQ(strip_timing(json::parse(a.out)).dump(), strip_timing(json::parse(b.out)).dump());
  EXPECT_EQ(strip_timing(json::parse(a.out)).dump(), strip_timing(json::parse(c.out)).dump());

  auto d = cli({"verify", "--group", "A2", "--k", "1/2", "--suite", "commutativity", "--seed", "7"});
  auto e = cli({"verify", "--group", "A2", "--k", "1/2", "--suite", "commutativity", "--seed", "8"});
  EXPECT_NE(json::parse(d.out)["reports"][0]["seed"], json::parse(e.out)["reports"][0]["seed"]);
}

TEST(CliVerify, SuitesRunInCanonicalOrder) {
  auto r = cli({"verify", "--group", "A1", "--k", "1", "--suite", "clifford,commutativity"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = json::parse(r.out);
  ASSERT_EQ(doc["suites"].size(), 2u);
  EXPECT_EQ(doc["suites"][0]["name"], "commutativity");
  EXPECT_EQ(doc["suites"][1]["name"], "clifford");
  EXPECT_EQ(doc["config"]["suites"], json::array({"commutativity", "clifford"}));
}

// The Dirac-Dunkl operator is formally symmetric under the weighted product,
// so its asserted skew-adjointness fails with a witness while the symmetric
// identity (measured) holds. Everything else at A2 passes exactly.
TEST(CliVerify, FullSuiteFailsOnlyOnDiracSkew) {
  auto r = cli({"verify", "--group", "A2", "--k", "1", "--rep", "trivial", "--suite", "all"});
  EXPECT_EQ(r.code, 1);
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["suites"].size(), 7u);
  int failed = 0;
  for (const auto& rep : doc["reports"]) {
    if (rep["status"] != "fail") continue;
    ++failed;
    EXPECT_EQ(rep["kind"], "asserted");
    EXPECT_EQ(rep["name"].get<std::string>().rfind("Dirac-Dunkl operator skew-adjoint", 0), 0u) << rep["name"];
    EXPECT_FALSE(rep["witness"].get<std::string>().empty());
    EXPECT_NE(rep["residual"], "0");
  }
  EXPECT_EQ(failed, 1);
  const auto* sym = find_report(doc, "Dirac-Dunkl operator symmetric");
  ASSERT_NE(sym, nullptr);
  EXPECT_EQ((*sym)["status"], "pass");
  EXPECT_EQ((*sym)["residual"], "0");
  for (const auto& rep : doc["reports"])
    if (rep["status"] == "pass" && rep["path"] != "mc") EXPECT_EQ(rep["residual"], "0") << rep["name"];
  EXPECT_NE(r.err.find("FAIL skew"), std::string::npos);
}

TEST(CliVerify, MonteCarloPathForHalfIntegerK) {
  auto r = cli({"verify", "--group", "A1", "--k", "1/2", "--suite", "skew"});
  auto doc = json::parse(r.out);
  for (const char* name : {"drift operator skew-adjoint", "Dunkl operator skew-adjoint"}) {
    const auto* rep = find_report(doc, name);
    ASSERT_NE(rep, nullptr) << name;
    EXPECT_EQ((*rep)["path"], "mc");
    EXPECT_EQ((*rep)["samples"], 1000000u);
    EXPECT_EQ((*rep)["status"], "pass") << (*rep)["residual"];
  }
}

TEST(CliVerify, MeasuredItemsNeverFailTheRun) {
  ddk::cli::ReportDocument doc;
  ddk::cli::OperatorReport m;
  m.name = "measured";
  m.suite = "square";
  m.kind = ddk::cli::Kind::measured;
  m.status = ddk::cli::Status::fail;
  m.witness = "w";
  doc.reports.push_back(m);
  EXPECT_EQ(doc.exit_code(), 0);
  EXPECT_EQ(doc.summary().measured_nonzero, 1);
  auto a = m;
  a.kind = ddk::cli::Kind::asserted;
  doc.reports.push_back(a);
  EXPECT_EQ(doc.exit_code(), 1);
  EXPECT_EQ(doc.to_json()["summary"]["failed"], 1);
}

TEST(CliVerify, NonTrivialRepAddsMeasuredEntries) {
  auto r = cli({"verify", "--group", "A2", "--k", "1", "--rep", "irrep2d", "--suite", "commutativity,square"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto doc = json::parse(r.out);
  const auto* twisted = find_report(doc, "twisted operators commute");
  ASSERT_NE(twisted, nullptr);
  EXPECT_EQ((*twisted)["kind"], "measured");
  const auto* sq = find_report(doc, "Dirac square: D^2 F + Delta_k F = 0 (rho=irrep2d)");
  ASSERT_NE(sq, nullptr);
  EXPECT_EQ((*sq)["kind"], "measured");
  const auto* ham = find_report(doc, "Hamiltonian Delta_k on the trivial class");
  ASSERT_NE(ham, nullptr);
  EXPECT_EQ((*ham)["details"]["basis"].size(), (*ham)["details"]["images"].size());
}

TEST(CliConfig, FileMirrorsFlagsAndFlagsWin) {
  const std::string path = ::testing::TempDir() + "ddk_config.ini";
  {
    std::ofstream f(path);
    f << "group=A1\nk=1/2\nrep=sign\nsuite=commutativity\nseed=99\nmc-samples=5000\ndegree-cap=2\n";
  }
  auto r = cli({"verify", "--config", path, "--k", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto cfg = json::parse(r.out)["config"];
  EXPECT_EQ(cfg["group"], "A1");
  EXPECT_EQ(cfg["k"], "2");
  EXPECT_EQ(cfg["rep"], "sign");
  EXPECT_EQ(cfg["seed"], 99u);
  EXPECT_EQ(cfg["mc_samples"], 5000u);
  EXPECT_EQ(cfg["degree_cap"], 2);
  EXPECT_EQ(cfg["suites"], json::array({"commutativity"}));
  std::remove(path.c_str());

  auto missing = cli({"verify", "--config", "/nonexistent/ddk.ini"});
  EXPECT_EQ(missing.code, 2);
}

TEST(CliConfig, DefaultSeedIsPublishedConstant) {
  auto r = cli({"verify", "--group", "A1", "--suite", "clifford"});
  EXPECT_EQ(json::parse(r.out)["config"]["seed"], ddk::cli::kDefaultSeed);
}

TEST(CliVerify, OutWritesFile) {
  const std::string path = ::testing::TempDir() + "ddk_report.json";
  auto r = cli({"verify", "--group", "A1", "--suite", "clifford", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  auto doc = json::parse(f);
  EXPECT_EQ(doc["tool"], "ddk");
  std::remove(path.c_str());
}
