#include "lieweyl/quadrature.hpp"

#include <cmath>

namespace lieweyl {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

// Neumaier compensated accumulator.
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
} // namespace

Complex QuadratureRule::integrate(const std::vector<Complex>& values) const {
  Kahan re, im;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    re.add(weights[i] * values[i].real());
    im.add(weights[i] * values[i].imag());
  }
  return {re.value(), im.value()};
}

double QuadratureRule::integrate_real(const std::vector<double>& values) const {
  Kahan re;
  for (std::size_t i = 0; i < nodes.size(); ++i) re.add(weights[i] * values[i]);
  return re.value();
}

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev initial guess, then Newton on P_n
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
}

int su2_twoL_limit(double bandlimit) {
  int twoL = 0;
  while (static_cast<double>(twoL + 1) * static_cast<double>(twoL + 3) / 4.0 <=
         bandlimit * bandlimit * (1.0 + 1e-13))
    ++twoL;
  return twoL;
}

RulePtr haar_quadrature(const GroupId& g, int bandlimit) {
  if (bandlimit < 0) throw ArgumentError("bandlimit must be nonnegative");
  auto rule = std::make_shared<QuadratureRule>();
  rule->group = g;
  rule->bandlimit = bandlimit;

  if (g.is_torus()) {
    const int n = g.dim();
    const int N = 2 * bandlimit + 2;
    const double w = 1.0 / std::pow(static_cast<double>(N), n);
    if (n == 1) {
      for (int i = 0; i < N; ++i) {
        GroupElement x;
        x[0] = kTwoPi * i / N;
        rule->nodes.push_back(x);
        rule->weights.push_back(w);
      }
    } else {
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          GroupElement x;
          x[0] = kTwoPi * i / N;
          x[1] = kTwoPi * j / N;
          rule->nodes.push_back(x);
          rule->weights.push_back(w);
        }
    }
    return rule;
  }

  if (bandlimit == 0)
    throw ArgumentError("SU(2) quadrature needs bandlimit >= 1");

  // Products of two in-band coefficients have alpha frequencies up to
  // twoLmax, half-integral gamma frequencies up to twoLmax, and Legendre
  // degree up to twoLmax in cos(beta).
  const int twoLmax = su2_twoL_limit(static_cast<double>(bandlimit));
  const int Na = std::max(2 * bandlimit + 2, twoLmax + 2);
  const int Nb = std::max(bandlimit + 1, twoLmax / 2 + 1);
  const int Ng = std::max(2 * bandlimit + 2, 2 * twoLmax + 2);

  std::vector<double> u, wu;
  gauss_legendre(Nb, u, wu);

  rule->nodes.reserve(static_cast<std::size_t>(Na) * Nb * Ng);
  rule->weights.reserve(rule->nodes.capacity());
  for (int ia = 0; ia < Na; ++ia) {
    const double alpha = kTwoPi * ia / Na;
    for (int ib = 0; ib < Nb; ++ib) {
      const double beta = std::acos(u[static_cast<std::size_t>(ib)]);
      const double wb = 0.5 * wu[static_cast<std::size_t>(ib)];
      for (int ig = 0; ig < Ng; ++ig) {
        GroupElement x;
        x[0] = alpha;
        x[1] = beta;
        x[2] = 2.0 * kTwoPi * ig / Ng;
        rule->nodes.push_back(x);
        rule->weights.push_back(wb / (static_cast<double>(Na) * Ng));
      }
    }
  }
  return rule;
}

} // namespace lieweyl
