#ifndef LIEWEYL_QUANTIZE_HPP
#define LIEWEYL_QUANTIZE_HPP

#include "lieweyl/operator_spec.hpp"

namespace lieweyl {

/// The global matrix-valued symbol sigma(x,xi) sampled per (node, irrep).
/// When `x_independent` is set, one matrix per irrep stands for every
/// node.
struct SymbolField {
  GroupId group;
  RulePtr rule;
  std::vector<IrrepLabel> irreps;
  std::vector<std::vector<Matrix>> mats; // [irrep][node] (or [irrep][0])
  double order_hint = 0.0;
  bool x_independent = false;

  const Matrix& at(std::size_t irrep_idx, std::size_t node_idx) const {
    const auto& v = mats[irrep_idx];
    return x_independent ? v[0] : v[node_idx];
  }
  std::size_t index_of(const IrrepLabel& xi) const;
};

/// Symbol of the spec over the given irreps.  Multiplication, Spectral,
/// SymbolRule, Scale and Sum use their closed forms; Product symbols are
/// extracted by applying the composed operator to matrix coefficients.
SymbolField symbol_of(const OperatorSpec& spec,
                      const std::vector<IrrepLabel>& irreps,
                      const RulePtr& rule);

/// Identity symbol (sigma = I on every irrep), handy as a base case.
SymbolField identity_symbol(const GroupId& g,
                            const std::vector<IrrepLabel>& irreps,
                            const RulePtr& rule);

/// Quantisation formula: (Af)(x) = sum_xi d_xi Tr[xi(x) sigma(x,xi)
/// fhat(xi)], evaluated at every node.  f must be band-limited within
/// sigma's irrep set.
GridFunction quantize_apply(const SymbolField& sigma, const GridFunction& f);

/// sigma_A(x,xi) = xi(x)^* (A xi)(x), with A applied to the d^2 matrix
/// coefficients through its direct action (independent of symbol_of's
/// closed forms).
Matrix extract_symbol(const OperatorSpec& spec, const GroupId& g,
                      const IrrepLabel& xi, const GroupElement& x,
                      const RulePtr& rule);

/// Same extraction at every node of the rule (one operator application).
std::vector<Matrix> extract_symbol_at_nodes(const OperatorSpec& spec,
                                            const GroupId& g,
                                            const IrrepLabel& xi,
                                            const RulePtr& rule);

/// Torus-only consistency check of the kernel route to the symbol:
/// computes the partial Fourier transform of the (band-truncated)
/// right-convolution kernel at (x, xi) and returns the max-norm residual
/// against extract_symbol.  Supported for Multiplication, Spectral,
/// their Scale/Sum combinations and Product(Multiplication, Spectral).
double kernel_symbol_check(const OperatorSpec& spec, const GroupId& g,
                           const IrrepLabel& xi, const GroupElement& x,
                           const RulePtr& rule);

/// Order reduction sigma~ = sigma * |xi|^{-m}; the trivial representation
/// maps to the zero matrix (kernel projection convention).
SymbolField reduce_order(const SymbolField& sigma);

} // namespace lieweyl

#endif
