#ifndef LIEWEYL_FOURIER_HPP
#define LIEWEYL_FOURIER_HPP

#include <vector>

#include "lieweyl/quadrature.hpp"

namespace lieweyl {

/// A function sampled at the nodes of a quadrature rule.
struct GridFunction {
  GroupId group;
  RulePtr rule;
  std::vector<Complex> values;

  std::size_t size() const { return values.size(); }
};

/// Group Fourier coefficients: one d_xi x d_xi matrix per enumerated
/// label, keys exactly dual_enumerate(group, lambda).
struct FourierCoefficients {
  GroupId group;
  double lambda = 0.0;
  std::vector<IrrepLabel> labels;
  std::vector<Matrix> mats;

  const Matrix* find(const IrrepLabel& xi) const;
  Matrix& at(const IrrepLabel& xi);
};

/// fhat(xi) = sum_x w(x) f(x) xi(x)^*.  Requires rule bandlimit >= 2*lambda
/// so that products of two in-band coefficients integrate exactly.
FourierCoefficients forward_ft(const GridFunction& f, double lambda);

/// Fourier inversion sum_xi d_xi Tr[xi(x) fhat(xi)] at a single point.
Complex inverse_ft(const FourierCoefficients& coeffs, const GroupElement& x);

/// Inversion evaluated at every node of the rule.
GridFunction synthesize(const FourierCoefficients& coeffs, const RulePtr& rule);

/// (sum_xi d_xi |fhat(xi)|_HS^2)^{1/2}.
double plancherel_norm(const FourierCoefficients& coeffs);

/// Quadrature L^2(G) norm of a grid function.
double l2_norm(const GridFunction& f);

// --- batch transform machinery (shared with quantize/weyl) ---

/// Matrix-coefficient table for one irrep over a node range: row x holds
/// vec(xi(x)) in column-major layout. `first` indexes into rule->nodes.
Matrix coefficient_table(const QuadratureRule& rule, const IrrepLabel& xi,
                         std::size_t first, std::size_t count);

/// Matrix-coefficient functions of one irrep as a nodes x d^2 batch,
/// column (j*d + i) holding xi_ij over the nodes.
Matrix coefficient_batch(const QuadratureRule& rule, const IrrepLabel& xi);

/// Forward transform of p functions at once.  G is nodes x p; the result
/// holds, per label, a d^2 x p matrix whose column q is vec(ghat_q(xi))
/// transposed-column-major (see fourier.cpp).  Used through
/// `batch_coefficient(...)` to avoid layout mistakes.
struct BatchCoefficients {
  std::vector<IrrepLabel> labels;
  std::vector<Matrix> blocks; // d^2 x p each

  /// ghat_q(labels[which]) as a proper d x d matrix.
  Matrix coefficient(std::size_t which, std::size_t q) const;
};

BatchCoefficients forward_ft_batch(const QuadratureRule& rule,
                                   const std::vector<IrrepLabel>& labels,
                                   const Matrix& G);

/// Inverse of forward_ft_batch: nodes x p values of
/// sum_xi d_xi Tr[xi(x) A_q(xi)].
Matrix synthesize_batch(const QuadratureRule& rule,
                        const BatchCoefficients& coeffs);

/// In-place per-label rescale of a batch (e.g. spectral multipliers).
void scale_batch(BatchCoefficients& coeffs,
                 const std::vector<Complex>& factors);

} // namespace lieweyl

#endif
