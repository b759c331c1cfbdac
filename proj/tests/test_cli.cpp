#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bohr/cli.hpp"

using bohr::cli::Command;
using bohr::cli::Format;
using bohr::cli::RunConfig;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run_cfg(RunConfig cfg) {
  std::ostringstream out, err;
  RunResult r;
  r.code = bohr::cli::run(cfg, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') {
        quoted = !quoted;
      } else if (c == ',' && !quoted) {
        fields.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    fields.push_back(cur);
    rows.push_back(fields);
  }
  return rows;
}

#ifdef BOHR_CLI_PATH
int run_binary(const std::string& args, std::string* output = nullptr) {
  const std::string tmp = std::string(BOHR_CLI_PATH) + ".out.tmp";
  const std::string cmd = std::string(BOHR_CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
  const int status = std::system(cmd.c_str());
  if (output) {
    std::ifstream f(tmp);
    std::ostringstream buf;
    buf << f.rdbuf();
    *output = buf.str();
  }
  std::remove(tmp.c_str());
  return WEXITSTATUS(status);
}
#endif

}  // namespace

TEST_CASE("selector tokens map onto the families") {
  using bohr::Family;
  CHECK(bohr::cli::family_from_token("T2_1") == Family::ConvexCombination);
  CHECK(bohr::cli::family_from_token("T2_2") == Family::ConvexWeighted);
  CHECK(bohr::cli::family_from_token("T2_3") == Family::ConvexDerivative);
  CHECK(bohr::cli::family_from_token("T3_1") == Family::PoleCombination);
  CHECK(bohr::cli::family_from_token("T3_2") == Family::PoleWeighted);
  CHECK(bohr::cli::family_from_token("T4_1") == Family::AngleCombination);
  CHECK(bohr::cli::family_from_token("T4_2") == Family::AngleWeighted);
  CHECK(bohr::cli::family_from_token("T4_3") == Family::AngleDerivative);
  CHECK(bohr::cli::family_from_token("univalent") == Family::Univalent);
  CHECK(bohr::cli::family_from_token("pole-weighted") == Family::PoleWeighted);
  CHECK_FALSE(bohr::cli::family_from_token("T9_9").has_value());
}

TEST_CASE("parse_range: inclusive endpoints") {
  const auto r = bohr::cli::parse_range("1:100:1");
  REQUIRE(r.has_value());
  const auto vals = r->values();
  REQUIRE(vals.size() == 100);
  CHECK(vals.front() == 1.0);
  CHECK(vals.back() == 100.0);
  CHECK_FALSE(bohr::cli::parse_range("2.5").has_value());
  CHECK_THROWS_AS(bohr::cli::parse_range("1:2"), std::domain_error);
  CHECK_THROWS_AS(bohr::cli::parse_range("3:1:1"), std::domain_error);
}

TEST_CASE("solve: text output carries the enclosure and residual") {
  RunConfig cfg;
  cfg.command = Command::Solve;
  cfg.family = bohr::Family::ConvexWeighted;
  cfg.params.K = 9;
  cfg.params.m = 5;
  cfg.params.lambda = 0.8;
  const auto r = run_cfg(cfg);
  CHECK(r.code == 0);
  const auto pos = r.out.find("root: ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::abs(std::stod(r.out.substr(pos + 6)) - 0.2573) <= 5e-5);
  CHECK(r.out.find("root enclosure") != std::string::npos);
  CHECK(r.out.find("residual") != std::string::npos);
}

TEST_CASE("solve: config errors name the violated range and return 2") {
  RunConfig cfg;
  cfg.command = Command::Solve;
  cfg.family = bohr::Family::ConvexCombination;
  cfg.params.K = 0.5;
  const auto r = run_cfg(cfg);
  CHECK(r.code == 2);
  CHECK(r.err.find("K must be >= 1") != std::string::npos);

  cfg.params.K = 2.0;
  cfg.params.t = 1.5;
  const auto r2 = run_cfg(cfg);
  CHECK(r2.code == 2);
  CHECK(r2.err.find("t must lie in [0, 1]") != std::string::npos);
}

TEST_CASE("csv round-trip: 17 significant digits reparse exactly") {
  RunConfig cfg;
  cfg.command = Command::Solve;
  cfg.family = bohr::Family::PoleWeighted;
  cfg.params.K = 2.6;
  cfg.params.m = 5;
  cfg.params.p = 0.7;
  cfg.params.lambda = 0.2;
  cfg.format = Format::Csv;
  const auto r = run_cfg(cfg);
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 2);
  const auto& header = rows[0];
  const auto& vals = rows[1];
  REQUIRE(header.size() == vals.size());

  auto col = [&](const std::string& name) {
    for (size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return std::stod(vals[i]);
    FAIL("missing column ", name);
    return 0.0;
  };
  const double lo = col("root_lo"), hi = col("root_hi"), mid = col("root");
  CHECK(lo < hi);
  CHECK(mid == 0.5 * (lo + hi));  // exact round trip through %.17g
  CHECK(hi - lo <= 1e-12);
  CHECK(col("residual") < 1e-10);
}

TEST_CASE("json: schema keys and version") {
  RunConfig cfg;
  cfg.command = Command::Solve;
  cfg.family = bohr::Family::ConvexWeighted;
  cfg.params.K = 9;
  cfg.params.m = 5;
  cfg.params.lambda = 0.8;
  cfg.format = Format::Json;
  const auto r = run_cfg(cfg);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "solve");
  CHECK(j["version"] == "1");
  REQUIRE(j.contains("params"));
  REQUIRE(j["results"].is_array());
  const auto& row = j["results"][0];
  for (const char* key : {"params", "root_lo", "root_hi", "capped", "residual"})
    CHECK(row.contains(key));
  const double lo = row["root_lo"].get<double>();
  const double hi = row["root_hi"].get<double>();
  CHECK(std::abs(0.5 * (lo + hi) - 0.2573) <= 5e-5);
}

TEST_CASE("determinism: identical configs emit byte-identical reports") {
  for (Format fmt : {Format::Text, Format::Csv, Format::Json}) {
    RunConfig cfg;
    cfg.command = Command::Verify;
    cfg.family = bohr::Family::ConvexWeighted;
    cfg.params.K = 3;
    cfg.params.m = 2;
    cfg.params.lambda = 0.5;
    cfg.samples = 10;
    cfg.radii = 5;
    cfg.seeds = {42, 7};
    cfg.format = fmt;
    const auto a = run_cfg(cfg);
    const auto b = run_cfg(cfg);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("sweep: conformal-limit column matches the closed form") {
  RunConfig cfg;
  cfg.command = Command::Sweep;
  cfg.family = bohr::Family::ConvexCombination;
  cfg.params.t = 0.0;
  cfg.params.m = 1;
  cfg.axis = bohr::cli::SweepAxis{bohr::cli::ParamField::K, {1.0, 100.0, 1.0}};
  cfg.format = Format::Csv;
  const auto r = run_cfg(cfg);
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 101);
  CHECK(rows[0][0] == "K");
  CHECK(rows[0][1] == "root");
  for (size_t i = 1; i < rows.size(); ++i) {
    const double K = std::stod(rows[i][0]);
    const double root = std::stod(rows[i][1]);
    CHECK(std::abs(root - (K + 1.0) / (5.0 * K + 1.0)) <= 1e-10);
  }
}

TEST_CASE("table: five matching rows for the pole fixture") {
  RunConfig cfg;
  cfg.command = Command::Table;
  cfg.table_id = "4";
  const auto r = run_cfg(cfg);
  CHECK(r.code == 0);
  CHECK(r.out.find("5/5 rows match") != std::string::npos);
}

TEST_CASE("table: the combination table states the duality") {
  RunConfig cfg;
  cfg.command = Command::Table;
  cfg.table_id = "1";
  const auto r = run_cfg(cfg);
  CHECK(r.code == 0);
  CHECK(r.out.find("lambda = t") != std::string::npos);
  CHECK(r.out.find("erratum-suspected") != std::string::npos);
  CHECK(r.out.find("out of range") != std::string::npos);

  cfg.table_id = "9";
  CHECK(run_cfg(cfg).code == 2);
}

TEST_CASE("output_path writes the report to a file") {
  const std::string path = "cli_test_report.csv";
  RunConfig cfg;
  cfg.command = Command::Table;
  cfg.table_id = "4";
  cfg.format = Format::Csv;
  cfg.output_path = path;
  const auto r = run_cfg(cfg);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string header;
  std::getline(f, header);
  CHECK(header.rfind("table_id,family,", 0) == 0);
  f.close();
  std::remove(path.c_str());
}

#ifdef BOHR_CLI_PATH
TEST_CASE("binary: exit codes and determinism end to end") {
  std::string out1, out2;
  CHECK(run_binary("solve --theorem T2_2 --K 9 --m 5 --lambda 0.8 --format json", &out1) == 0);
  CHECK(run_binary("solve --theorem T2_2 --K 9 --m 5 --lambda 0.8 --format json", &out2) == 0);
  CHECK(out1 == out2);
  CHECK(out1.find("0.2572997") != std::string::npos);

  CHECK(run_binary("solve --theorem T2_1 --K 0.5") == 2);
  CHECK(run_binary("solve --theorem bogus") == 2);
  CHECK(run_binary("solve --theorem T2_1 --K 2 --m 3.5 --t 0.2") == 2);
  // the sign change sits below the probe floor: reported as no-root, code 3
  CHECK(run_binary("solve --theorem T2_2 --K 1 --m 1 --lambda 1e15") == 3);
  CHECK(run_binary("solve --theorem T2_1 --K 2 --t 0.5 --lambda 0:1:0.1") == 2);
  CHECK(run_binary("sweep --theorem T2_1 --t 0:0.5:0.1 --K 1:2:1") == 2);
  CHECK(run_binary("table --id 12") == 2);

  std::string env_out;
  CHECK(run_binary("solve --family univalent --K 3", &env_out) == 0);
  CHECK(env_out.find("univalent") != std::string::npos);
}

TEST_CASE("binary: BOHR_TOL env var overrides the default tolerance") {
  std::string out;
  const std::string tmp = std::string(BOHR_CLI_PATH) + ".env.tmp";
  const std::string cmd = std::string("BOHR_TOL=1e-6 ") + BOHR_CLI_PATH +
                          " solve --theorem T2_2 --K 9 --m 5 --lambda 0.8 > " + tmp + " 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  std::ifstream f(tmp);
  std::ostringstream buf;
  buf << f.rdbuf();
  out = buf.str();
  std::remove(tmp.c_str());
  const auto pos = out.find("tol: ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(out.substr(pos + 5)) == 1e-6);

  const std::string bad = std::string("BOHR_TOL=banana ") + BOHR_CLI_PATH + " table --id 4 > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(bad.c_str())) == 2);
}
#endif
