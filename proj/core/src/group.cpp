#include "lieweyl/group.hpp"

#include <algorithm>
#include <cmath>

#include "lieweyl/wigner.hpp"

namespace lieweyl {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  // fmod can land exactly on the period after the correction
  if (r >= period) r -= period;
  return r;
}

using Mat2 = Eigen::Matrix2cd;

// Fundamental representation U(alpha,beta,gamma) =
// e^{-i alpha sz/2} e^{-i beta sy/2} e^{-i gamma sz/2}.
Mat2 su2_from_euler(const GroupElement& x) {
  const double a = x[0], b = x[1], g = x[2];
  const double cb = std::cos(b / 2.0), sb = std::sin(b / 2.0);
  Mat2 u;
  u(0, 0) = std::polar(cb, -(a + g) / 2.0);
  u(0, 1) = -std::polar(sb, -(a - g) / 2.0);
  u(1, 0) = std::polar(sb, (a - g) / 2.0);
  u(1, 1) = std::polar(cb, (a + g) / 2.0);
  return u;
}

// Canonical Euler angles of a unitary U in SU(2):
// alpha in [0,2pi), beta in [0,pi], gamma in [0,4pi).
GroupElement euler_from_su2(const Mat2& u) {
  GroupElement e;
  const double cb = std::abs(u(0, 0));
  const double sb = std::abs(u(1, 0));
  const double beta = 2.0 * std::atan2(sb, cb);
  if (sb < 1e-14) {
    // diagonal: only alpha + gamma is determined
    const double s = wrap(-2.0 * std::arg(u(0, 0)), 2.0 * kTwoPi);
    e[0] = s < kTwoPi ? s : s - kTwoPi;
    e[1] = 0.0;
    e[2] = s < kTwoPi ? 0.0 : kTwoPi;
  } else if (cb < 1e-14) {
    // anti-diagonal: only alpha - gamma is determined
    const double t = wrap(2.0 * std::arg(u(1, 0)), 2.0 * kTwoPi);
    e[0] = t < kTwoPi ? t : t - kTwoPi;
    e[1] = kTwoPi / 2.0;
    e[2] = t < kTwoPi ? 0.0 : kTwoPi;
  } else {
    const double phi_p = wrap(-std::arg(u(0, 0)), kTwoPi); // (alpha+gamma)/2
    const double phi_m = wrap(std::arg(u(1, 0)), kTwoPi);  // (alpha-gamma)/2
    e[0] = wrap(phi_p + phi_m, kTwoPi);
    e[1] = beta;
    e[2] = wrap(2.0 * phi_p - e[0], 2.0 * kTwoPi);
  }
  return e;
}

} // namespace

std::string group_name(const GroupId& g) {
  switch (g.kind) {
    case GroupKind::Torus1: return "t1";
    case GroupKind::Torus2: return "t2";
    case GroupKind::SU2: return "su2";
  }
  return "?";
}

GroupElement identity_element(const GroupId&) { return GroupElement{}; }

GroupElement canonicalize(const GroupId& g, const GroupElement& x) {
  if (g.is_torus()) {
    GroupElement r;
    for (int i = 0; i < g.dim(); ++i) r[i] = wrap(x[i], kTwoPi);
    return r;
  }
  return euler_from_su2(su2_from_euler(x));
}

GroupElement group_product(const GroupId& g, const GroupElement& x,
                           const GroupElement& y) {
  if (g.is_torus()) {
    GroupElement r;
    for (int i = 0; i < g.dim(); ++i) r[i] = wrap(x[i] + y[i], kTwoPi);
    return r;
  }
  return euler_from_su2(Mat2(su2_from_euler(x) * su2_from_euler(y)));
}

std::string IrrepLabel::to_string() const {
  switch (kind) {
    case GroupKind::Torus1: return "k=" + std::to_string(k[0]);
    case GroupKind::Torus2:
      return "k=(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + ")";
    case GroupKind::SU2: return "twoL=" + std::to_string(twoL);
  }
  return "?";
}

void check_label(const GroupId& g, const IrrepLabel& xi) {
  if (g.kind != xi.kind)
    throw LabelGroupMismatch("irrep label " + xi.to_string() +
                             " does not belong to group " + group_name(g));
}

std::vector<IrrepLabel> dual_enumerate(const GroupId& g, double lambda) {
  if (lambda < 0.0) lambda = 0.0;
  // enumerate mu_raw <= lambda^2 / metric_scale (with a roundoff guard)
  const double cap = lambda * lambda / g.metric_scale * (1.0 + 1e-13) + 1e-13;
  std::vector<IrrepLabel> out;
  switch (g.kind) {
    case GroupKind::Torus1: {
      const auto kmax = static_cast<std::int64_t>(std::floor(std::sqrt(cap)));
      for (std::int64_t k = -kmax; k <= kmax; ++k)
        out.push_back(IrrepLabel::torus1(k));
      break;
    }
    case GroupKind::Torus2: {
      const auto kmax = static_cast<std::int64_t>(std::floor(std::sqrt(cap)));
      for (std::int64_t k0 = -kmax; k0 <= kmax; ++k0)
        for (std::int64_t k1 = -kmax; k1 <= kmax; ++k1)
          if (static_cast<double>(k0 * k0 + k1 * k1) <= cap)
            out.push_back(IrrepLabel::torus2(k0, k1));
      break;
    }
    case GroupKind::SU2: {
      for (std::int64_t twoL = 0;; ++twoL) {
        const double mu =
            static_cast<double>(twoL) * static_cast<double>(twoL + 2) / 4.0;
        if (mu > cap) break;
        out.push_back(IrrepLabel::su2(twoL));
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IrrepLabel& a, const IrrepLabel& b) {
              const double ma = a.mu_raw(), mb = b.mu_raw();
              if (ma != mb) return ma < mb;
              if (a.k != b.k) return a.k < b.k;
              return a.twoL < b.twoL;
            });
  return out;
}

Matrix irrep_matrix(const GroupId& g, const IrrepLabel& xi,
                    const GroupElement& x) {
  check_label(g, xi);
  if (g.is_torus()) {
    double phase = 0.0;
    for (int i = 0; i < g.dim(); ++i)
      phase += static_cast<double>(xi.k[static_cast<std::size_t>(i)]) * x[i];
    Matrix m(1, 1);
    m(0, 0) = std::polar(1.0, phase);
    return m;
  }
  return wigner_D(static_cast<int>(xi.twoL), x[0], x[1], x[2]);
}

std::vector<BasisIndex> peter_weyl_basis(const GroupId& g, double lambda) {
  std::vector<BasisIndex> out;
  for (const auto& xi : dual_enumerate(g, lambda)) {
    const int d = xi.dim();
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) out.push_back({xi, i, j});
  }
  return out;
}

} // namespace lieweyl
