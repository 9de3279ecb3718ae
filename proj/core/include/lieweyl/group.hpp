#ifndef LIEWEYL_GROUP_HPP
#define LIEWEYL_GROUP_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lieweyl/errors.hpp"

namespace lieweyl {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Concrete compact Lie groups supported by the library.
enum class GroupKind : std::uint8_t { Torus1, Torus2, SU2 };

/// A group together with its metric normalization.  `metric_scale`
/// multiplies every Laplace eigenvalue; the default gives mu = |k|^2 on
/// the torus and mu = l(l+1) on SU(2).
struct GroupId {
  GroupKind kind = GroupKind::Torus1;
  double metric_scale = 1.0;

  static GroupId torus(int n, double scale = 1.0) {
    if (n < 1 || n > 2) throw ArgumentError("torus rank must be 1 or 2");
    return {n == 1 ? GroupKind::Torus1 : GroupKind::Torus2, scale};
  }
  static GroupId su2(double scale = 1.0) { return {GroupKind::SU2, scale}; }

  /// Manifold dimension n (1, 2 or 3).
  int dim() const {
    switch (kind) {
      case GroupKind::Torus1: return 1;
      case GroupKind::Torus2: return 2;
      case GroupKind::SU2: return 3;
    }
    return 0;
  }
  bool is_torus() const { return kind != GroupKind::SU2; }
  /// Number of chart coordinates (equals dim()).
  int coord_count() const { return dim(); }

  bool operator==(const GroupId& o) const {
    return kind == o.kind && metric_scale == o.metric_scale;
  }
};

std::string group_name(const GroupId& g);

/// A group element in chart coordinates.  Torus: angles in [0,2pi)^n.
/// SU(2): zyz Euler angles (alpha, beta, gamma) in [0,2pi)x[0,pi]x[0,4pi);
/// the 4pi gamma range keeps half-integer spins single-valued.
struct GroupElement {
  std::array<double, 3> c{0.0, 0.0, 0.0};

  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
};

/// Identity element of the group.
GroupElement identity_element(const GroupId& g);

/// Reduce coordinates into the fundamental domain.
GroupElement canonicalize(const GroupId& g, const GroupElement& x);

/// Group product x*y, computed in coordinates.  The SU(2) product goes
/// through the 2x2 fundamental representation and back to Euler angles.
GroupElement group_product(const GroupId& g, const GroupElement& x,
                           const GroupElement& y);

/// A point of the unitary dual.  Torus: frequency vector k in Z^n.
/// SU(2): twoL = 2l, kept integral so half-integer spins stay exact.
struct IrrepLabel {
  GroupKind kind = GroupKind::Torus1;
  std::array<std::int64_t, 2> k{0, 0}; // torus frequency
  std::int64_t twoL = 0;               // SU(2) doubled spin

  static IrrepLabel torus1(std::int64_t k0) {
    IrrepLabel l;
    l.kind = GroupKind::Torus1;
    l.k = {k0, 0};
    return l;
  }
  static IrrepLabel torus2(std::int64_t k0, std::int64_t k1) {
    IrrepLabel l;
    l.kind = GroupKind::Torus2;
    l.k = {k0, k1};
    return l;
  }
  static IrrepLabel su2(std::int64_t twoL) {
    if (twoL < 0) throw ArgumentError("twoL must be nonnegative");
    IrrepLabel l;
    l.kind = GroupKind::SU2;
    l.twoL = twoL;
    return l;
  }

  /// Representation dimension d_xi.
  int dim() const {
    return kind == GroupKind::SU2 ? static_cast<int>(twoL) + 1 : 1;
  }
  /// Laplace eigenvalue before metric scaling.
  double mu_raw() const {
    if (kind == GroupKind::SU2)
      return static_cast<double>(twoL) * static_cast<double>(twoL + 2) / 4.0;
    return static_cast<double>(k[0] * k[0] + k[1] * k[1]);
  }
  /// Laplace eigenvalue mu_xi under the group's metric scale.
  double mu(const GroupId& g) const { return g.metric_scale * mu_raw(); }
  /// |xi| = sqrt(mu_xi).
  double modulus(const GroupId& g) const { return std::sqrt(mu(g)); }
  /// True for the trivial representation 1_Ghat.
  bool is_trivial() const { return mu_raw() == 0.0; }

  bool operator==(const IrrepLabel& o) const {
    return kind == o.kind && k == o.k && twoL == o.twoL;
  }

  std::string to_string() const;
};

/// All labels with |xi| <= lambda, one representative per class, sorted
/// by (mu, lexicographic raw label).  Deterministic; lambda < 0 is
/// treated as 0 so the trivial representation is always present.
std::vector<IrrepLabel> dual_enumerate(const GroupId& g, double lambda);

/// xi(x) as a unitary d x d matrix.  Torus: [e^{i k.x}].  SU(2): the
/// Wigner-D matrix D^l(alpha,beta,gamma), rows indexed by m descending
/// from +l.
Matrix irrep_matrix(const GroupId& g, const IrrepLabel& xi,
                    const GroupElement& x);

/// One entry of the Peter-Weyl basis sqrt(d) xi_ij; i, j are 1-based.
struct BasisIndex {
  IrrepLabel label;
  int i = 1;
  int j = 1;
};

/// Enumerate the Peter-Weyl basis functions sqrt(d_xi) xi_ij for
/// |xi| <= lambda; count is sum of d_xi^2.
std::vector<BasisIndex> peter_weyl_basis(const GroupId& g, double lambda);

void check_label(const GroupId& g, const IrrepLabel& xi);

} // namespace lieweyl

#endif
