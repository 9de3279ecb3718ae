#ifndef LIEWEYL_WIGNER_HPP
#define LIEWEYL_WIGNER_HPP

#include <vector>

#include <Eigen/Dense>

namespace lieweyl {

/// Wigner little-d matrix d^l(beta) for twoL = 2l, computed by the
/// standard three-term recurrence in l (seeded at l = max(|m|,|m'|)).
/// Rows and columns are indexed by m descending from +l, so row 0 is
/// m = +l.  Stable at double precision through the desk-scale range.
Eigen::MatrixXd wigner_little_d(int twoL, double beta);

/// Little-d matrices for every twoL = 0..twoLmax at a single beta.
/// Shares the recurrence work across levels; entry [twoL] has size
/// (twoL+1) x (twoL+1).
std::vector<Eigen::MatrixXd> wigner_little_d_stack(int twoLmax, double beta);

/// Full Wigner-D matrix D^l(alpha,beta,gamma) = e^{-i m alpha} d^l(beta)
/// e^{-i m' gamma} with the same descending-m index convention.
Eigen::MatrixXcd wigner_D(int twoL, double alpha, double beta, double gamma);

/// Apply the alpha/gamma phases to a precomputed little-d matrix.
Eigen::MatrixXcd wigner_apply_phases(const Eigen::MatrixXd& little_d,
                                     int twoL, double alpha, double gamma);

} // namespace lieweyl

#endif
