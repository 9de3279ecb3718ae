#ifndef LIEWEYL_REPORT_HPP
#define LIEWEYL_REPORT_HPP

#include <string>
#include <vector>

#include "lieweyl/weyl.hpp"

namespace lieweyl {

/// Fields echoed into every report.
struct ReportMeta {
  std::string group;
  std::string op_text; // canonical printed form
  std::string command;
  std::string version;
};

/// One lemma-check record.
struct LemmaRow {
  IrrepLabel label;
  int dim = 1;
  double modulus = 0.0;
  double residual = 0.0;
};

/// Decimal rendering used by every CSV cell: 12 significant digits,
/// integers render without a decimal point.
std::string render_number(double v);

std::string emit_scan(const ReportMeta& meta,
                      const std::vector<WeylScanRow>& rows,
                      const std::string& format);
std::string emit_lemma(const ReportMeta& meta,
                       const std::vector<LemmaRow>& rows,
                       const std::string& format);
std::string emit_sequence(const ReportMeta& meta,
                          const std::vector<CorollaryTerm>& terms,
                          const std::string& format);
std::string emit_growth(const ReportMeta& meta, const GrowthResult& result,
                        const std::string& format);

} // namespace lieweyl

#endif
