#include "lieweyl/driver.hpp"

#include <cmath>
#include <map>

#include "lieweyl/opparse.hpp"
#include "lieweyl/parallel.hpp"

namespace lieweyl {

namespace {

GroupId group_from_name(const std::string& name) {
  if (name == "t1") return GroupId::torus(1);
  if (name == "t2") return GroupId::torus(2);
  if (name == "su2") return GroupId::su2();
  throw ArgumentError("unknown group '" + name + "' (expected t1|t2|su2)");
}

std::vector<double> lambda_grid(double lambda_max, int steps) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps));
  for (int i = 1; i <= steps; ++i)
    grid.push_back(lambda_max * static_cast<double>(i) /
                   static_cast<double>(steps));
  return grid;
}

// Effective coordinate band of the operator, margin-clamped.
double effective_band(const OperatorSpec& spec) {
  const double b = spec_coord_band(spec);
  return std::isinf(b) ? kBandMargin : b;
}

// Rule for scan-style commands: closed-form specs only need the
// operator's own spatial band; extraction falls back to coefficient
// resolution at lambda_max.
RulePtr scan_rule(const GroupId& g, const OperatorSpec& spec,
                  double lambda_max) {
  const bool closed = closed_symbol_terms(spec).has_value();
  const double need = closed ? effective_band(spec) + 2.0
                             : 2.0 * lambda_max + effective_band(spec) + 2.0;
  const int B = std::max(1, static_cast<int>(std::ceil(need)));
  return haar_quadrature(g, B);
}

} // namespace

RunResult run(const CliConfig& config) {
  if (!(config.lambda_max > 0.0))
    throw ArgumentError("lambda-max must be positive");
  if (config.steps < 1) throw ArgumentError("steps must be >= 1");
  if (config.format != "csv" && config.format != "json")
    throw ArgumentError("format must be csv or json");
  if (config.threads < 1) throw ArgumentError("threads must be >= 1");

  const GroupId g = group_from_name(config.group);
  SpecPtr spec = parse_operator(config.op_text);

  ReportMeta meta;
  meta.group = config.group;
  meta.op_text = print_operator(*spec);
  meta.command = config.command;
  meta.version = kVersion;

  RunResult result;

  if (config.command == "lemma-check") {
    const auto irreps = dual_enumerate(g, config.lambda_max);
    std::vector<int> bands(irreps.size());
    std::map<int, RulePtr> rules; // keyed by bandlimit
    for (std::size_t i = 0; i < irreps.size(); ++i) {
      const double need =
          2.0 * irreps[i].modulus(g) + effective_band(*spec) + 2.0;
      bands[i] = std::max(1, static_cast<int>(std::ceil(need)));
      auto& rule = rules[bands[i]];
      if (!rule) rule = haar_quadrature(g, bands[i]);
    }
    std::vector<LemmaRow> rows(irreps.size());
    parallel_for(irreps.size(), config.threads, [&](std::size_t i) {
      const auto check =
          verify_core_identity(*spec, g, irreps[i], rules.at(bands[i]));
      rows[i] = {irreps[i], irreps[i].dim(), irreps[i].modulus(g),
                 check.residual};
    });
    double max_residual = 0.0;
    for (const auto& row : rows)
      max_residual = std::max(max_residual, row.residual);
    result.report = emit_lemma(meta, rows, config.format);
    result.exit_code = max_residual <= kLemmaTolerance ? 0 : 1;
    return result;
  }

  if (config.command == "weyl-scan") {
    const RulePtr rule = scan_rule(g, *spec, config.lambda_max);
    const ReferenceLimit ref = reference_limit(*spec, rule, config.f_inf);
    const auto rows = weyl_scan(*spec, g,
                                lambda_grid(config.lambda_max, config.steps),
                                rule, ref, config.threads);
    result.report = emit_scan(meta, rows, config.format);
    return result;
  }

  if (config.command == "limit-seq") {
    const RulePtr rule = scan_rule(g, *spec, config.lambda_max);
    const auto terms =
        corollary_sequence(*spec, g, config.lambda_max, rule, config.threads);
    result.report = emit_sequence(meta, terms, config.format);
    return result;
  }

  if (config.command == "growth") {
    if (!(config.order > 0.0))
      throw ArgumentError("growth needs --order m > 0");
    const RulePtr rule = scan_rule(g, *spec, config.lambda_max);
    const auto verdict = growth_check(
        *spec, g, lambda_grid(config.lambda_max, config.steps), rule,
        config.order, config.threads);
    result.report = emit_growth(meta, verdict, config.format);
    result.exit_code = verdict.bound_ok ? 0 : 1;
    return result;
  }

  throw ArgumentError("unknown command '" + config.command +
                      "' (expected lemma-check|weyl-scan|limit-seq|growth)");
}

} // namespace lieweyl
