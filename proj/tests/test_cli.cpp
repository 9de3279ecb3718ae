#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lieweyl/report.hpp"

#ifndef LIEWEYL_CLI_PATH
#define LIEWEYL_CLI_PATH "lieweyl"
#endif

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(LIEWEYL_CLI_PATH) + " " + args + " 2>/dev/null";
  CommandResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.output.append(buf.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) rows.push_back(split_csv_line(line));
  return rows;
}

} // namespace

TEST_CASE("weyl-scan csv: zero-mean multiplier averages to zero") {
  const auto r = run_cli(
      "weyl-scan --group t1 --op \"mult(cos(x1))\" --lambda-max 50 --steps 10");
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == std::vector<std::string>{"lambda", "N", "T", "avg", "ref",
                                            "abs_err"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == 6);
    CHECK(std::abs(std::stod(rows[i][3])) < 1e-12);
    CHECK(std::abs(std::stod(rows[i][5])) < 1e-12); // matches its own ref
  }
}

TEST_CASE("weyl-scan renders identity rows as integers") {
  const auto r = run_cli(
      "weyl-scan --group t1 --op \"spec(1)\" --lambda-max 5 --steps 1");
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][0] == "5");
  CHECK(rows[1][1] == "11");
  CHECK(rows[1][2] == "11");
  CHECK(rows[1][3] == "1");
}

TEST_CASE("lemma-check exits 0 within tolerance") {
  const auto r = run_cli(
      "lemma-check --group su2 --op \"mult(cos(x3))\" --lambda-max 4 --steps 1");
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() >= 2);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(std::stod(rows[i][3]) <= 1e-8);
}

TEST_CASE("growth fits the lattice slope and respects exit codes") {
  const auto ok = run_cli(
      "growth --group t1 --op \"sym(t^1, I)\" --order 1 --lambda-max 100 "
      "--steps 20");
  REQUIRE(ok.exit_code == 0);
  const auto rows = parse_csv(ok.output);
  const double slope = std::stod(rows[1][3]);
  CHECK(slope > 1.9);
  CHECK(slope < 2.1);
  CHECK(rows[1][5] == "true");

  const auto neg = run_cli(
      "growth --group t1 --op \"scale(-1, sym(t^1, I))\" --order 1 "
      "--lambda-max 50 --steps 12");
  CHECK(neg.exit_code == 3);
}

TEST_CASE("configuration and parse failures exit 2") {
  CHECK(run_cli("weyl-scan --group t9 --op \"spec(1)\" --lambda-max 5")
            .exit_code == 2);
  CHECK(run_cli("weyl-scan --group t1 --op \"mult(frog(x1))\" --lambda-max 5")
            .exit_code == 2);
  CHECK(run_cli("weyl-scan --group t1 --op \"mult(cos(t))\" --lambda-max 5")
            .exit_code == 2);
  CHECK(run_cli("nonsense --group t1 --op \"spec(1)\" --lambda-max 5")
            .exit_code == 2);
  CHECK(run_cli("growth --group t1 --op \"sym(t^1, I)\" --order 1 "
                "--lambda-max -3")
            .exit_code == 2);
}

TEST_CASE("json reports echo the canonical operator") {
  const auto r = run_cli(
      "limit-seq --group su2 --op \"spec( t^2 / (1 + t^2) )\" --lambda-max 3 "
      "--format json");
  REQUIRE(r.exit_code == 0);
  // canonical form parenthesizes the power so '/' cannot be read as
  // part of the exponent
  CHECK(r.output.find("\"operator\": \"spec((t^2)/(1+t^2))\"") !=
        std::string::npos);
  CHECK(r.output.find("\"command\": \"limit-seq\"") != std::string::npos);
  CHECK(r.output.find("\"cesaro\"") != std::string::npos);
}

TEST_CASE("byte-identical output across runs and thread counts") {
  const std::string base =
      "weyl-scan --group su2 --op \"prod(mult(1 + cos(x3)), "
      "spec(t^2/(1+t^2)))\" --f-inf 1 --lambda-max 12 --steps 6";
  const auto a = run_cli(base + " --threads 1");
  const auto b = run_cli(base + " --threads 1");
  const auto c = run_cli(base + " --threads 2");
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output == c.output);
  CHECK(a.output.find("e") != std::string::npos); // sanity: non-empty table
}

TEST_CASE("header-only csv for an empty scan") {
  lieweyl::ReportMeta meta{"t1", "spec(1)", "weyl-scan", "0.1.0"};
  CHECK(lieweyl::emit_scan(meta, {}, "csv") == "lambda,N,T,avg,ref,abs_err\n");
}

TEST_CASE("unwritable output path exits 4") {
  const auto r = run_cli(
      "weyl-scan --group t1 --op \"spec(1)\" --lambda-max 4 --steps 2 "
      "--out /nonexistent-dir/report.csv");
  CHECK(r.exit_code == 4);
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "/tmp/lieweyl_test_out.csv";
  std::remove(path.c_str());
  const auto r = run_cli("weyl-scan --group t1 --op \"spec(1)\" "
                         "--lambda-max 4 --steps 2 --out " +
                         path);
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "lambda,N,T,avg,ref,abs_err");
  std::remove(path.c_str());
}
