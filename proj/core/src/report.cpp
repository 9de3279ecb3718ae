#include "lieweyl/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace lieweyl {

namespace {

using Json = nlohmann::ordered_json;

Json meta_json(const ReportMeta& meta) {
  Json j;
  j["group"] = meta.group;
  j["operator"] = meta.op_text;
  j["command"] = meta.command;
  j["version"] = meta.version;
  return j;
}

std::string finish_json(const ReportMeta& meta, Json rows, Json extra = {}) {
  Json root;
  root["meta"] = meta_json(meta);
  if (!extra.is_null())
    for (auto& [k, v] : extra.items()) root[k] = v;
  root["rows"] = std::move(rows);
  return root.dump(2) + "\n";
}

} // namespace

std::string render_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string emit_scan(const ReportMeta& meta,
                      const std::vector<WeylScanRow>& rows,
                      const std::string& format) {
  if (format == "csv") {
    std::string out = "lambda,N,T,avg,ref,abs_err\n";
    for (const auto& r : rows) {
      out += render_number(r.lambda);
      out += ',' + std::to_string(r.N);
      out += ',' + render_number(r.T);
      out += ',' + render_number(r.avg);
      out += ',';
      if (r.ref) out += render_number(*r.ref);
      out += ',';
      if (r.abs_err) out += render_number(*r.abs_err);
      out += '\n';
    }
    return out;
  }
  Json jr = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["lambda"] = r.lambda;
    row["N"] = r.N;
    row["T"] = r.T;
    row["avg"] = r.avg;
    if (r.ref) {
      row["ref"] = *r.ref;
      row["abs_err"] = *r.abs_err;
    }
    jr.push_back(std::move(row));
  }
  return finish_json(meta, std::move(jr));
}

std::string emit_lemma(const ReportMeta& meta,
                       const std::vector<LemmaRow>& rows,
                       const std::string& format) {
  if (format == "csv") {
    std::string out = "irrep,dim,modulus,residual\n";
    for (const auto& r : rows) {
      out += r.label.to_string();
      out += ',' + std::to_string(r.dim);
      out += ',' + render_number(r.modulus);
      out += ',' + render_number(r.residual);
      out += '\n';
    }
    return out;
  }
  Json jr = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["irrep"] = r.label.to_string();
    row["dim"] = r.dim;
    row["modulus"] = r.modulus;
    row["residual"] = r.residual;
    jr.push_back(std::move(row));
  }
  return finish_json(meta, std::move(jr));
}

std::string emit_sequence(const ReportMeta& meta,
                          const std::vector<CorollaryTerm>& terms,
                          const std::string& format) {
  if (format == "csv") {
    std::string out = "n,irrep,A_n,cesaro\n";
    for (std::size_t i = 0; i < terms.size(); ++i) {
      out += std::to_string(i + 1);
      out += ',' + terms[i].label.to_string();
      out += ',' + render_number(terms[i].A_n);
      out += ',' + render_number(terms[i].cesaro);
      out += '\n';
    }
    return out;
  }
  Json jr = Json::array();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Json row;
    row["n"] = i + 1;
    row["irrep"] = terms[i].label.to_string();
    row["A_n"] = terms[i].A_n;
    row["cesaro"] = terms[i].cesaro;
    jr.push_back(std::move(row));
  }
  return finish_json(meta, std::move(jr));
}

std::string emit_growth(const ReportMeta& meta, const GrowthResult& result,
                        const std::string& format) {
  if (format == "csv") {
    std::string out = "lambda,N,T,slope,constant,bound_ok\n";
    for (const auto& r : result.rows) {
      out += render_number(r.lambda);
      out += ',' + std::to_string(r.N);
      out += ',' + render_number(r.T);
      out += ',' + render_number(result.slope);
      out += ',' + render_number(result.constant);
      out += ',';
      out += result.bound_ok ? "true" : "false";
      out += '\n';
    }
    return out;
  }
  Json fit;
  fit["slope"] = result.slope;
  fit["constant"] = result.constant;
  fit["bound_ok"] = result.bound_ok;
  fit["degenerate"] = result.degenerate;
  Json jr = Json::array();
  for (const auto& r : result.rows) {
    Json row;
    row["lambda"] = r.lambda;
    row["N"] = r.N;
    row["T"] = r.T;
    jr.push_back(std::move(row));
  }
  Json extra;
  extra["fit"] = std::move(fit);
  return finish_json(meta, std::move(jr), std::move(extra));
}

} // namespace lieweyl
