#include "lieweyl/wigner.hpp"

#include <cmath>
#include <complex>

#include "lieweyl/errors.hpp"

namespace lieweyl {
namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b *= static_cast<double>(n - k + i) / i;
  return b;
}

double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

// Boundary value of d^l at max(|m|,|m'|) = l, where the defining sum
// collapses to a single term.  c = cos(beta/2), s = sin(beta/2); twoM is
// the doubled row index, twoN the doubled column index.
double seed_entry(int twoL, int twoM, int twoN, double c, double s) {
  if (twoM == twoL)
    return std::sqrt(binomial(twoL, (twoL + twoN) / 2)) *
           ipow(c, (twoL + twoN) / 2) * ipow(-s, (twoL - twoN) / 2);
  if (twoN == twoL)
    return std::sqrt(binomial(twoL, (twoL + twoM) / 2)) *
           ipow(c, (twoL + twoM) / 2) * ipow(s, (twoL - twoM) / 2);
  if (twoM == -twoL)
    return std::sqrt(binomial(twoL, (twoL - twoN) / 2)) *
           ipow(c, (twoL - twoN) / 2) * ipow(s, (twoL + twoN) / 2);
  // twoN == -twoL
  return std::sqrt(binomial(twoL, (twoL - twoM) / 2)) *
         ipow(c, (twoL - twoM) / 2) * ipow(-s, (twoL + twoM) / 2);
}

// Fetch d^{twoL}_{m m'} from a stack indexed by twoL, or 0 when the
// entry does not exist at that level.
double fetch(const std::vector<Eigen::MatrixXd>& stack, int twoL, int twoM,
             int twoN) {
  if (twoL < 0 || twoM < -twoL || twoM > twoL || twoN < -twoL || twoN > twoL)
    return 0.0;
  const int r = (twoL - twoM) / 2;
  const int col = (twoL - twoN) / 2;
  return stack[static_cast<std::size_t>(twoL)](r, col);
}

} // namespace

std::vector<Eigen::MatrixXd> wigner_little_d_stack(int twoLmax, double beta) {
  if (twoLmax < 0) throw ArgumentError("twoLmax must be nonnegative");
  const double c = std::cos(beta / 2.0);
  const double s = std::sin(beta / 2.0);
  const double X = std::cos(beta);

  std::vector<Eigen::MatrixXd> stack;
  stack.reserve(static_cast<std::size_t>(twoLmax) + 1);
  for (int twoL = 0; twoL <= twoLmax; ++twoL) {
    const int d = twoL + 1;
    Eigen::MatrixXd m(d, d);
    const double ell = twoL / 2.0;
    for (int r = 0; r < d; ++r) {
      const int twoM = twoL - 2 * r;
      const double mu = twoM / 2.0;
      for (int col = 0; col < d; ++col) {
        const int twoN = twoL - 2 * col;
        const double nu = twoN / 2.0;
        const int mx = std::max(std::abs(twoM), std::abs(twoN));
        if (mx == twoL) {
          m(r, col) = seed_entry(twoL, twoM, twoN, c, s);
        } else if (twoL == 2 && twoM == 0 && twoN == 0) {
          m(r, col) = X; // d^1_{00}, below the recurrence's reach
        } else {
          // three-term recurrence in l: new level l+1 from l and l-1
          const double lm = ell - 1.0; // middle level
          const double a = (2.0 * lm + 1.0) * (lm * (lm + 1.0) * X - mu * nu);
          const double b =
              (lm + 1.0) * std::sqrt((lm * lm - mu * mu) * (lm * lm - nu * nu));
          const double den = lm * std::sqrt(((lm + 1.0) * (lm + 1.0) - mu * mu) *
                                            ((lm + 1.0) * (lm + 1.0) - nu * nu));
          const double mid = fetch(stack, twoL - 2, twoM, twoN);
          const double old = fetch(stack, twoL - 4, twoM, twoN);
          m(r, col) = (a * mid - b * old) / den;
        }
      }
    }
    stack.push_back(std::move(m));
  }
  return stack;
}

Eigen::MatrixXd wigner_little_d(int twoL, double beta) {
  auto stack = wigner_little_d_stack(twoL, beta);
  return std::move(stack.back());
}

Eigen::MatrixXcd wigner_apply_phases(const Eigen::MatrixXd& little_d, int twoL,
                                     double alpha, double gamma) {
  const int d = twoL + 1;
  Eigen::VectorXcd pa(d), pg(d);
  for (int r = 0; r < d; ++r) {
    const double m = (twoL - 2 * r) / 2.0;
    pa(r) = std::polar(1.0, -m * alpha);
    pg(r) = std::polar(1.0, -m * gamma);
  }
  return pa.asDiagonal() * little_d.cast<std::complex<double>>() *
         pg.asDiagonal();
}

Eigen::MatrixXcd wigner_D(int twoL, double alpha, double beta, double gamma) {
  return wigner_apply_phases(wigner_little_d(twoL, beta), twoL, alpha, gamma);
}

} // namespace lieweyl
