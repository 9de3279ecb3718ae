#include "lieweyl/quantize.hpp"

#include <cmath>

namespace lieweyl {

namespace {

// (A xi)(x) as a d x d matrix from batch values (column j*d+i = xi_ij).
Matrix unflatten_coefficients(const Eigen::VectorXcd& v, int d) {
  Matrix m(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i)
      m(i, j) = v(static_cast<Eigen::Index>(j) * d + i);
  return m;
}

} // namespace

std::size_t SymbolField::index_of(const IrrepLabel& xi) const {
  for (std::size_t i = 0; i < irreps.size(); ++i)
    if (irreps[i] == xi) return i;
  throw ArgumentError("irrep " + xi.to_string() + " not in symbol field");
}

SymbolField symbol_of(const OperatorSpec& spec,
                      const std::vector<IrrepLabel>& irreps,
                      const RulePtr& rule) {
  SymbolField out;
  out.group = rule->group;
  out.rule = rule;
  out.irreps = irreps;
  out.order_hint = spec_order(spec);
  out.mats.resize(irreps.size());

  if (spec.kind == SpecKind::Sum) {
    std::vector<SymbolField> parts;
    parts.reserve(spec.children.size());
    for (const auto& c : spec.children)
      parts.push_back(symbol_of(*c, irreps, rule));
    bool xind = true;
    for (const auto& p : parts) xind = xind && p.x_independent;
    out.x_independent = xind;
    const std::size_t nn = xind ? 1 : rule->size();
    for (std::size_t li = 0; li < irreps.size(); ++li) {
      const int d = irreps[li].dim();
      out.mats[li].assign(nn, Matrix::Zero(d, d));
      for (const auto& p : parts)
        for (std::size_t r = 0; r < nn; ++r)
          out.mats[li][r] += p.at(li, r);
    }
    return out;
  }
  if (spec.kind == SpecKind::Scale) {
    out = symbol_of(*spec.children[0], irreps, rule);
    for (auto& per_irrep : out.mats)
      for (auto& m : per_irrep) m *= spec.scale_factor;
    out.order_hint = spec_order(spec);
    return out;
  }
  if (spec.kind == SpecKind::Product) {
    // exact extraction, no composition expansion
    out.x_independent = false;
    for (std::size_t li = 0; li < irreps.size(); ++li)
      out.mats[li] =
          extract_symbol_at_nodes(spec, rule->group, irreps[li], rule);
    return out;
  }

  const auto terms = closed_symbol_terms(spec);
  if (!terms) throw ArgumentError("spec has no closed-form symbol");
  bool xind = true;
  for (const auto& t : *terms) xind = xind && t.x_independent();
  out.x_independent = xind;
  const std::size_t nn = xind ? 1 : rule->size();
  const GroupElement origin = identity_element(rule->group);
  for (std::size_t li = 0; li < irreps.size(); ++li) {
    const int d = irreps[li].dim();
    const double mod = irreps[li].modulus(rule->group);
    out.mats[li].reserve(nn);
    for (std::size_t r = 0; r < nn; ++r) {
      const GroupElement& x = xind ? origin : rule->nodes[r];
      Matrix m = symbol_terms_matrix(*terms, x, mod, d);
      if (!m.allFinite())
        throw EvalError("symbol evaluation not finite",
                        xind ? -1 : static_cast<std::ptrdiff_t>(r),
                        irreps[li].to_string());
      out.mats[li].push_back(std::move(m));
    }
  }
  return out;
}

SymbolField identity_symbol(const GroupId& g,
                            const std::vector<IrrepLabel>& irreps,
                            const RulePtr& rule) {
  SymbolField out;
  out.group = g;
  out.rule = rule;
  out.irreps = irreps;
  out.x_independent = true;
  out.mats.resize(irreps.size());
  for (std::size_t li = 0; li < irreps.size(); ++li)
    out.mats[li] = {Matrix::Identity(irreps[li].dim(), irreps[li].dim())};
  return out;
}

GridFunction quantize_apply(const SymbolField& sigma, const GridFunction& f) {
  if (!(f.group == sigma.group))
    throw ArgumentError("symbol and function live on different groups");
  double lambda = 0.0;
  for (const auto& xi : sigma.irreps)
    lambda = std::max(lambda, xi.modulus(sigma.group));
  const FourierCoefficients coeffs = forward_ft(f, lambda);
  if (coeffs.labels != sigma.irreps)
    throw QuadratureBandError(
        "symbol irrep set does not match the enumerated dual");

  const auto& rule = *f.rule;
  GridFunction out;
  out.group = f.group;
  out.rule = f.rule;
  out.values.assign(rule.size(), Complex{0.0, 0.0});
  for (std::size_t li = 0; li < sigma.irreps.size(); ++li) {
    const IrrepLabel& eta = sigma.irreps[li];
    const double d = eta.dim();
    for (std::size_t r = 0; r < rule.size(); ++r) {
      const Matrix D = irrep_matrix(sigma.group, eta, rule.nodes[r]);
      out.values[r] += d * (D * sigma.at(li, r) * coeffs.mats[li]).trace();
    }
  }
  return out;
}

std::vector<Matrix> extract_symbol_at_nodes(const OperatorSpec& spec,
                                            const GroupId& g,
                                            const IrrepLabel& xi,
                                            const RulePtr& rule) {
  check_label(g, xi);
  FunctionBatch applied =
      apply_operator(spec, coefficient_functions(g, rule, xi));
  ensure_grid(applied);
  const int d = xi.dim();
  std::vector<Matrix> out;
  out.reserve(rule->size());
  for (std::size_t r = 0; r < rule->size(); ++r) {
    const Matrix D = irrep_matrix(g, xi, rule->nodes[r]);
    const Matrix Axi = unflatten_coefficients(
        applied.grid->row(static_cast<Eigen::Index>(r)).transpose(), d);
    out.push_back(D.adjoint() * Axi);
  }
  return out;
}

Matrix extract_symbol(const OperatorSpec& spec, const GroupId& g,
                      const IrrepLabel& xi, const GroupElement& x,
                      const RulePtr& rule) {
  check_label(g, xi);
  const Eigen::VectorXcd values =
      apply_operator_at(spec, coefficient_functions(g, rule, xi), x);
  const Matrix Axi = unflatten_coefficients(values, xi.dim());
  const Matrix D = irrep_matrix(g, xi, x);
  return D.adjoint() * Axi;
}

namespace {

// Closed-form right-convolution kernel pieces on the torus:
// kernel(x, z) = sum_i c_i * g_i(x) * sum_{|k| <= B} h_i(|k|) e^{ik.z}.
struct KernelTerm {
  Complex coeff{1.0, 0.0};
  ExprPtr spatial;  // nullptr -> 1
  ExprPtr spectral; // nullptr -> 1 (Dirichlet kernel)
};

std::optional<std::vector<KernelTerm>> kernel_terms(const OperatorSpec& spec) {
  using Terms = std::vector<KernelTerm>;
  switch (spec.kind) {
    case SpecKind::Multiplication:
      return Terms{{Complex{1.0, 0.0}, spec.expr, nullptr}};
    case SpecKind::Spectral:
      return Terms{{Complex{1.0, 0.0}, nullptr, spec.expr}};
    case SpecKind::Scale: {
      auto t = kernel_terms(*spec.children[0]);
      if (!t) return std::nullopt;
      for (auto& term : *t) term.coeff *= spec.scale_factor;
      return t;
    }
    case SpecKind::Sum: {
      Terms out;
      for (const auto& c : spec.children) {
        auto t = kernel_terms(*c);
        if (!t) return std::nullopt;
        out.insert(out.end(), t->begin(), t->end());
      }
      return out;
    }
    case SpecKind::Product: {
      // multiplication outside a spectral multiplier:
      // R(x,z) = kappa(x) * R_spec(z)
      const auto& a = *spec.children[0];
      const auto& b = *spec.children[1];
      if (a.kind == SpecKind::Multiplication && b.kind == SpecKind::Spectral)
        return Terms{{Complex{1.0, 0.0}, a.expr, b.expr}};
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

} // namespace

double kernel_symbol_check(const OperatorSpec& spec, const GroupId& g,
                           const IrrepLabel& xi, const GroupElement& x,
                           const RulePtr& rule) {
  if (!g.is_torus())
    throw UnsupportedError("kernel quantisation check is torus-only");
  check_label(g, xi);
  const auto terms = kernel_terms(spec);
  if (!terms)
    throw UnsupportedError(
        "spec has no closed-form right-convolution kernel");

  const auto band_labels =
      dual_enumerate(g, static_cast<double>(rule->bandlimit));
  // R_hat(x, xi) = sum_z w(z) R(x, z) conj(e^{i k.z})
  Complex rhat = 0.0;
  std::vector<Complex> integrand(rule->size());
  for (const auto& t : *terms) {
    const Complex cx =
        t.coeff * (t.spatial ? expr_eval(*t.spatial, x.c, 0.0) : 1.0);
    if (cx == Complex{0.0, 0.0}) continue;
    for (std::size_t r = 0; r < rule->size(); ++r) {
      const GroupElement& z = rule->nodes[r];
      Complex kernel_z = 0.0;
      for (const auto& eta : band_labels) {
        const double h =
            t.spectral ? expr_eval(*t.spectral, {0, 0, 0}, eta.modulus(g))
                       : 1.0;
        double phase = 0.0;
        for (int i = 0; i < g.dim(); ++i)
          phase += static_cast<double>(eta.k[static_cast<std::size_t>(i)]) * z[i];
        kernel_z += h * std::polar(1.0, phase);
      }
      double xphase = 0.0;
      for (int i = 0; i < g.dim(); ++i)
        xphase += static_cast<double>(xi.k[static_cast<std::size_t>(i)]) * z[i];
      integrand[r] = kernel_z * std::polar(1.0, -xphase);
    }
    rhat += cx * rule->integrate(integrand);
  }

  const Matrix sym = extract_symbol(spec, g, xi, x, rule);
  return std::abs(rhat - sym(0, 0));
}

SymbolField reduce_order(const SymbolField& sigma) {
  if (sigma.order_hint <= 0.0)
    throw ArgumentError("reduce_order needs positive order");
  SymbolField out = sigma;
  out.order_hint = 0.0;
  // x-independence survives, but the trivial-rep slot becomes the zero
  // matrix rather than being dropped.
  for (std::size_t li = 0; li < sigma.irreps.size(); ++li) {
    const IrrepLabel& xi = sigma.irreps[li];
    if (xi.is_trivial()) {
      for (auto& m : out.mats[li]) m.setZero();
    } else {
      const double s = std::pow(xi.modulus(sigma.group), -sigma.order_hint);
      for (auto& m : out.mats[li]) m *= s;
    }
  }
  return out;
}

} // namespace lieweyl
