#ifndef LIEWEYL_QUADRATURE_HPP
#define LIEWEYL_QUADRATURE_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "lieweyl/group.hpp"

namespace lieweyl {

/// Nodes and weights realizing the normalized Haar integral.  The rule
/// integrates exactly every product of two matrix coefficients of irreps
/// with modulus within `bandlimit`; weights sum to 1.
struct QuadratureRule {
  GroupId group;
  std::vector<GroupElement> nodes;
  std::vector<double> weights;
  int bandlimit = 0;

  std::size_t size() const { return nodes.size(); }

  /// Quadrature integral of node values (compensated summation).
  Complex integrate(const std::vector<Complex>& values) const;
  double integrate_real(const std::vector<double>& values) const;
};

using RulePtr = std::shared_ptr<const QuadratureRule>;

/// Build the Haar quadrature for the group at the given bandlimit.
/// Torus: (2B+2)^n equispaced nodes, equal weights.  SU(2): equispaced
/// alpha and gamma, Gauss-Legendre in cos(beta); gamma gets enough nodes
/// to separate every half-integer frequency that a product of two
/// in-band coefficients can produce.  B = 0 is rejected on SU(2).
RulePtr haar_quadrature(const GroupId& g, int bandlimit);

/// Gauss-Legendre nodes and weights on [-1, 1] (weights sum to 2).
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// Largest twoL whose modulus is within the bandlimit (metric scale 1).
int su2_twoL_limit(double bandlimit);

} // namespace lieweyl

#endif
