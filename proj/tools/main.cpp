// Command-line front end: lemma checks, Weyl scans, quantum-limit
// sequences and growth-bound fits over a small operator grammar.
//
// Exit codes: 0 pass, 1 check failed, 2 configuration/parse error,
// 3 numerical precondition failure, 4 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lieweyl/driver.hpp"

namespace {

void add_common_options(CLI::App* cmd, lieweyl::CliConfig& config) {
  cmd->add_option("--group", config.group, "Group: t1, t2 or su2")
      ->required()
      ->check(CLI::IsMember({"t1", "t2", "su2"}));
  cmd->add_option("--op", config.op_text, "Operator expression")->required();
  cmd->add_option("--lambda-max", config.lambda_max, "Largest lambda")
      ->required();
  cmd->add_option("--steps", config.steps, "Number of lambda grid points");
  cmd->add_option("--format", config.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", config.out_path, "Output path (default stdout)");
  cmd->add_option("--threads", config.threads,
                  "Worker threads (output is thread-count independent)");
}

int write_report(const lieweyl::CliConfig& config, const std::string& report) {
  if (config.out_path.empty()) {
    std::cout << report;
    return std::cout.good() ? 0 : 4;
  }
  std::ofstream out(config.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << config.out_path << "'\n";
    return 4;
  }
  out << report;
  out.close();
  if (!out) {
    std::cerr << "error: failed writing '" << config.out_path << "'\n";
    return 4;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix-valued quantisation and local Weyl scans on compact "
               "Lie groups"};
  app.require_subcommand(1);

  lieweyl::CliConfig config;
  config.steps = 1;

  auto* lemma = app.add_subcommand(
      "lemma-check", "Per-irrep residuals of the trace identity");
  auto* scan = app.add_subcommand(
      "weyl-scan", "Partial traces and counting-normalized averages");
  auto* seq = app.add_subcommand(
      "limit-seq", "Per-irrep sequence with running average");
  auto* growth =
      app.add_subcommand("growth", "Growth-bound fit for positive order");

  for (auto* cmd : {lemma, scan, seq, growth}) add_common_options(cmd, config);
  scan->add_option("--f-inf", [&config](const std::vector<std::string>& v) {
        config.f_inf = std::stod(v.at(0));
        return true;
      },
      "Declared spectral limit f(t) -> f_inf for the reference column");
  growth->add_option("--order", config.order, "Operator order m > 0")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return 2;
  }

  config.command = app.get_subcommands().front()->get_name();

  try {
    const lieweyl::RunResult result = lieweyl::run(config);
    const int io = write_report(config, result.report);
    return io != 0 ? io : result.exit_code;
  } catch (const lieweyl::ExprError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lieweyl::QuadratureBandError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const lieweyl::PositivityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const lieweyl::EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const lieweyl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
