#ifndef LIEWEYL_DRIVER_HPP
#define LIEWEYL_DRIVER_HPP

#include <optional>
#include <string>

#include "lieweyl/report.hpp"

namespace lieweyl {

inline constexpr const char* kVersion = "0.1.0";

/// Residual threshold for the lemma-check pass/fail verdict.
inline constexpr double kLemmaTolerance = 1e-8;

/// A fully resolved command; seedless, so identical configs produce
/// byte-identical reports regardless of thread count.
struct CliConfig {
  std::string group = "t1";  // t1 | t2 | su2
  std::string command;       // lemma-check | weyl-scan | limit-seq | growth
  std::string op_text;
  double lambda_max = 0.0;
  int steps = 1;
  double order = 0.0;        // growth only
  std::optional<double> f_inf;
  std::string format = "csv"; // csv | json
  std::string out_path;       // empty = stdout
  int threads = 1;
};

struct RunResult {
  int exit_code = 0; // 0 pass, 1 check failed
  std::string report;
};

/// Execute the command and build its report.  Configuration problems
/// throw ArgumentError/ExprError; numerical precondition failures throw
/// QuadratureBandError/PositivityError/EvalError (the CLI maps these to
/// exit codes 2 and 3).
RunResult run(const CliConfig& config);

} // namespace lieweyl

#endif
