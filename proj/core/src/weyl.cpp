#include "lieweyl/weyl.hpp"

#include <cmath>

#include "lieweyl/parallel.hpp"

namespace lieweyl {

namespace {

// Neumaier compensated accumulator (summation order is part of the
// output contract, so scans reduce sequentially in enumeration order).
struct Kahan {
  double sum = 0.0, comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

std::vector<TraceIntegral> trace_integrals(const OperatorSpec& spec,
                                           const GroupId& g,
                                           const std::vector<IrrepLabel>& xs,
                                           const RulePtr& rule, int threads) {
  std::vector<TraceIntegral> out(xs.size());
  parallel_for(xs.size(), threads, [&](std::size_t i) {
    out[i] = trace_integral(spec, g, xs[i], rule);
  });
  return out;
}

} // namespace

ReferenceLimit reference_limit(const OperatorSpec& spec, const RulePtr& rule,
                               std::optional<double> f_inf) {
  using Kind = ReferenceLimit::Kind;
  auto haar_integral = [&](const ExprPtr& kappa) {
    std::vector<double> values(rule->size());
    for (std::size_t r = 0; r < rule->size(); ++r)
      values[r] = expr_eval(*kappa, rule->nodes[r].c, 0.0);
    return rule->integrate_real(values);
  };
  switch (spec.kind) {
    case SpecKind::Multiplication:
      return {Kind::MultiplicationAvg, haar_integral(spec.expr)};
    case SpecKind::Spectral:
      if (f_inf) return {Kind::SpectralAvg, *f_inf};
      return {};
    case SpecKind::Product: {
      const auto& a = *spec.children[0];
      const auto& b = *spec.children[1];
      if (a.kind == SpecKind::Multiplication && b.kind == SpecKind::Spectral &&
          f_inf)
        return {Kind::ProductAvg, *f_inf * haar_integral(a.expr)};
      return {};
    }
    case SpecKind::Scale: {
      if (spec.scale_factor.imag() != 0.0) return {};
      ReferenceLimit r = reference_limit(*spec.children[0], rule, f_inf);
      r.value *= spec.scale_factor.real();
      return r;
    }
    case SpecKind::Sum: {
      ReferenceLimit acc;
      bool first = true;
      for (const auto& c : spec.children) {
        ReferenceLimit r = reference_limit(*c, rule, f_inf);
        if (!r.present()) return {};
        if (first) {
          acc = r;
          first = false;
        } else if (acc.kind == r.kind) {
          acc.value += r.value;
        } else {
          return {};
        }
      }
      return acc;
    }
    default: return {};
  }
}

TraceIntegral trace_integral(const OperatorSpec& spec, const GroupId& g,
                             const IrrepLabel& xi, const RulePtr& rule) {
  check_label(g, xi);
  const int d = xi.dim();
  const double mod = xi.modulus(g);

  if (const auto terms = closed_symbol_terms(spec)) {
    Kahan re, im;
    for (const auto& t : *terms) {
      const double weight =
          t.factor == MatrixFactor::Identity ? static_cast<double>(d) : 1.0;
      if (t.x_independent()) {
        const double s = t.scalar ? expr_eval(*t.scalar, {0, 0, 0}, mod) : 1.0;
        if (!std::isfinite(s))
          throw EvalError("symbol scalar not finite", -1, xi.to_string());
        const Complex v = t.coeff * s * weight;
        re.add(v.real());
        im.add(v.imag());
      } else {
        Kahan sre, sim;
        for (std::size_t r = 0; r < rule->size(); ++r) {
          const double s = expr_eval(*t.scalar, rule->nodes[r].c, mod);
          if (!std::isfinite(s))
            throw EvalError("symbol scalar not finite",
                            static_cast<std::ptrdiff_t>(r), xi.to_string());
          sre.add(rule->weights[r] * s);
          sim.add(0.0);
        }
        const Complex v = t.coeff * sre.value() * weight;
        re.add(v.real());
        im.add(v.imag());
      }
    }
    return {re.value(), std::abs(im.value())};
  }

  // no closed form: integrate the trace of the extracted symbol
  const double need = 2.0 * mod + spec_coord_band(spec);
  if (static_cast<double>(rule->bandlimit) + 1e-9 <
      (std::isinf(need) ? 2.0 * mod + kBandMargin : need))
    throw QuadratureBandError(
        "rule bandlimit " + std::to_string(rule->bandlimit) +
        " too small to extract the symbol at " + xi.to_string());
  const auto mats = extract_symbol_at_nodes(spec, g, xi, rule);
  Kahan re, im;
  for (std::size_t r = 0; r < rule->size(); ++r) {
    const Complex tr = mats[r].trace();
    re.add(rule->weights[r] * tr.real());
    im.add(rule->weights[r] * tr.imag());
  }
  return {re.value(), std::abs(im.value())};
}

Complex matrix_element(const OperatorSpec& spec, const GroupId& g,
                       const BasisIndex& which, const RulePtr& rule) {
  const IrrepLabel& xi = which.label;
  check_label(g, xi);
  const int d = xi.dim();
  if (which.i < 1 || which.i > d || which.j < 1 || which.j > d)
    throw ArgumentError("basis index out of range for " + xi.to_string());

  FunctionBatch applied =
      apply_operator(spec, coefficient_functions(g, rule, xi));
  ensure_grid(applied);
  const Matrix base = coefficient_batch(*rule, xi);
  const Eigen::Index q =
      static_cast<Eigen::Index>(which.j - 1) * d + (which.i - 1);
  Complex acc = 0.0;
  for (std::size_t r = 0; r < rule->size(); ++r)
    acc += rule->weights[r] *
           std::conj(base(static_cast<Eigen::Index>(r), q)) *
           (*applied.grid)(static_cast<Eigen::Index>(r), q);
  return static_cast<double>(d) * acc;
}

CoreIdentityResult verify_core_identity(const OperatorSpec& spec,
                                        const GroupId& g, const IrrepLabel& xi,
                                        const RulePtr& rule) {
  check_label(g, xi);
  const int d = xi.dim();

  // left side: sum_ij (A xi_ij, xi_ij), all d^2 coefficients in one batch
  FunctionBatch applied =
      apply_operator(spec, coefficient_functions(g, rule, xi));
  ensure_grid(applied);
  const Matrix base = coefficient_batch(*rule, xi);
  Kahan re, im;
  for (Eigen::Index q = 0; q < base.cols(); ++q)
    for (std::size_t r = 0; r < rule->size(); ++r) {
      const Complex v = rule->weights[r] *
                        std::conj(base(static_cast<Eigen::Index>(r), q)) *
                        (*applied.grid)(static_cast<Eigen::Index>(r), q);
      re.add(v.real());
      im.add(v.imag());
    }
  const Complex lhs{re.value(), im.value()};

  // right side: the symbol-trace integral
  Complex rhs;
  if (closed_symbol_terms(spec)) {
    const double mod = xi.modulus(g);
    const auto terms = *closed_symbol_terms(spec);
    Kahan rre, rim;
    for (const auto& t : terms) {
      const double weight =
          t.factor == MatrixFactor::Identity ? static_cast<double>(d) : 1.0;
      Kahan s;
      if (t.x_independent()) {
        s.add(t.scalar ? expr_eval(*t.scalar, {0, 0, 0}, mod) : 1.0);
      } else {
        for (std::size_t r = 0; r < rule->size(); ++r)
          s.add(rule->weights[r] * expr_eval(*t.scalar, rule->nodes[r].c, mod));
      }
      const Complex v = t.coeff * s.value() * weight;
      rre.add(v.real());
      rim.add(v.imag());
    }
    rhs = {rre.value(), rim.value()};
  } else {
    const auto mats = extract_symbol_at_nodes(spec, g, xi, rule);
    Kahan rre, rim;
    for (std::size_t r = 0; r < rule->size(); ++r) {
      const Complex tr = mats[r].trace();
      rre.add(rule->weights[r] * tr.real());
      rim.add(rule->weights[r] * tr.imag());
    }
    rhs = {rre.value(), rim.value()};
  }
  return {lhs, rhs, std::abs(lhs - rhs)};
}

std::int64_t counting_function(const GroupId& g, double lambda) {
  std::int64_t n = 0;
  for (const auto& xi : dual_enumerate(g, lambda)) {
    const std::int64_t d = xi.dim();
    n += d * d;
  }
  return n;
}

TraceIntegral partial_trace(const OperatorSpec& spec, const GroupId& g,
                            double lambda, const RulePtr& rule, int threads) {
  const auto labels = dual_enumerate(g, lambda);
  const auto integrals = trace_integrals(spec, g, labels, rule, threads);
  Kahan acc;
  double imax = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    acc.add(static_cast<double>(labels[i].dim()) * integrals[i].value);
    imax = std::max(imax, integrals[i].imag_abs);
  }
  return {acc.value(), imax};
}

std::vector<WeylScanRow> weyl_scan(const OperatorSpec& spec, const GroupId& g,
                                   const std::vector<double>& lambda_grid,
                                   const RulePtr& rule,
                                   const ReferenceLimit& ref, int threads) {
  for (std::size_t i = 1; i < lambda_grid.size(); ++i)
    if (!(lambda_grid[i] > lambda_grid[i - 1]))
      throw ArgumentError("lambda grid must be strictly increasing");
  if (lambda_grid.empty()) return {};

  const auto labels = dual_enumerate(g, lambda_grid.back());
  const auto integrals = trace_integrals(spec, g, labels, rule, threads);

  std::vector<WeylScanRow> rows;
  rows.reserve(lambda_grid.size());
  Kahan T;
  std::int64_t N = 0;
  std::size_t next = 0;
  for (const double lambda : lambda_grid) {
    while (next < labels.size() &&
           labels[next].mu(g) <= lambda * lambda * (1.0 + 1e-13) + 1e-13) {
      const std::int64_t d = labels[next].dim();
      T.add(static_cast<double>(d) * integrals[next].value);
      N += d * d;
      ++next;
    }
    WeylScanRow row;
    row.lambda = lambda;
    row.N = N;
    row.T = T.value();
    row.avg = N > 0 ? row.T / static_cast<double>(N) : 0.0;
    if (ref.present()) {
      row.ref = ref.value;
      row.abs_err = std::abs(row.avg - ref.value);
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<CorollaryTerm> corollary_sequence(const OperatorSpec& spec,
                                              const GroupId& g,
                                              double lambda_max,
                                              const RulePtr& rule,
                                              int threads) {
  if (!(lambda_max > 0.0)) throw ArgumentError("lambda_max must be positive");
  const auto labels = dual_enumerate(g, lambda_max);
  const auto integrals = trace_integrals(spec, g, labels, rule, threads);
  std::vector<CorollaryTerm> out;
  out.reserve(labels.size());
  Kahan sum;
  std::int64_t N = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::int64_t d = labels[i].dim();
    CorollaryTerm term;
    term.label = labels[i];
    term.A_n = static_cast<double>(d) * integrals[i].value;
    sum.add(term.A_n);
    N += d * d;
    // running average against the counting function, the normalization
    // under which the scan averages converge
    term.cesaro = sum.value() / static_cast<double>(N);
    out.push_back(term);
  }
  return out;
}

GrowthResult growth_check(const OperatorSpec& spec, const GroupId& g,
                          const std::vector<double>& lambda_grid,
                          const RulePtr& rule, double order_m, int threads) {
  if (!(order_m > 0.0)) throw ArgumentError("growth check needs order m > 0");
  if (lambda_grid.empty()) throw ArgumentError("empty lambda grid");

  const auto labels = dual_enumerate(g, lambda_grid.back());

  // positivity precondition: Tr sigma(x, xi) >= -1e-12 everywhere
  constexpr double kTol = 1e-12;
  const auto terms = closed_symbol_terms(spec);
  for (std::size_t li = 0; li < labels.size(); ++li) {
    const double mod = labels[li].modulus(g);
    const int d = labels[li].dim();
    if (terms) {
      bool xind = true;
      for (const auto& t : *terms) xind = xind && t.x_independent();
      const std::size_t nn = xind ? 1 : rule->size();
      for (std::size_t r = 0; r < nn; ++r) {
        const GroupElement& x =
            xind ? identity_element(g) : rule->nodes[r];
        const Complex tr = symbol_terms_trace(*terms, x, mod, d);
        if (tr.real() < -kTol || std::abs(tr.imag()) > 1e-9)
          throw PositivityError("Tr sigma is not nonnegative",
                                xind ? -1 : static_cast<std::ptrdiff_t>(r),
                                labels[li].to_string(), tr.real());
      }
    } else {
      const auto mats = extract_symbol_at_nodes(spec, g, labels[li], rule);
      for (std::size_t r = 0; r < mats.size(); ++r) {
        const Complex tr = mats[r].trace();
        if (tr.real() < -1e-9)
          throw PositivityError("Tr sigma is not nonnegative",
                                static_cast<std::ptrdiff_t>(r),
                                labels[li].to_string(), tr.real());
      }
    }
  }

  if (lambda_grid.size() - lambda_grid.size() / 2 < 6)
    throw ArgumentError(
        "lambda grid too short for the slope fit (needs >= 6 points in the "
        "upper half)");

  GrowthResult out;
  out.rows = weyl_scan(spec, g, lambda_grid, rule, ReferenceLimit{}, threads);

  const double nm = g.dim() + order_m;
  for (const auto& row : out.rows)
    if (row.T > 0.0)
      out.constant = std::max(out.constant, row.T / std::pow(row.lambda, nm));

  // slope fit over the upper half of the grid
  std::vector<double> lx, ly;
  for (std::size_t i = out.rows.size() / 2; i < out.rows.size(); ++i) {
    if (out.rows[i].T > 0.0) {
      lx.push_back(std::log(out.rows[i].lambda));
      ly.push_back(std::log(out.rows[i].T));
    }
  }
  if (lx.size() < 6) {
    // essentially no spectral mass in the fit window (zero operator)
    out.degenerate = true;
    out.slope = 0.0;
    out.bound_ok = true;
    return out;
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(lx.size());
  my /= static_cast<double>(lx.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  out.slope = sxy / sxx;
  out.bound_ok = out.slope <= nm + 0.1;
  return out;
}

} // namespace lieweyl
