#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lieweyl/fourier.hpp"

using namespace lieweyl;

namespace {

GridFunction constant_function(const GroupId& g, const RulePtr& rule,
                               Complex c) {
  GridFunction f;
  f.group = g;
  f.rule = rule;
  f.values.assign(rule->size(), c);
  return f;
}

// Random band-limited function built directly from random coefficients
// (independent of forward_ft).
GridFunction random_bandlimited(const GroupId& g, const RulePtr& rule,
                                double lambda, std::mt19937& rng,
                                FourierCoefficients* coeffs_out = nullptr) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  FourierCoefficients coeffs;
  coeffs.group = g;
  coeffs.lambda = lambda;
  coeffs.labels = dual_enumerate(g, lambda);
  for (const auto& xi : coeffs.labels) {
    Matrix m(xi.dim(), xi.dim());
    for (Eigen::Index i = 0; i < m.size(); ++i)
      m.data()[i] = Complex(gauss(rng), gauss(rng));
    coeffs.mats.push_back(std::move(m));
  }
  if (coeffs_out) *coeffs_out = coeffs;
  return synthesize(coeffs, rule);
}

} // namespace

TEST_CASE("forward transform of simple torus functions") {
  const GroupId g = GroupId::torus(1);
  auto rule = haar_quadrature(g, 6);

  auto one = constant_function(g, rule, 1.0);
  auto c1 = forward_ft(one, 3.0);
  for (std::size_t li = 0; li < c1.labels.size(); ++li) {
    const double want = c1.labels[li].k[0] == 0 ? 1.0 : 0.0;
    CHECK(std::abs(c1.mats[li](0, 0) - Complex(want)) < 1e-13);
  }

  GridFunction wave = one;
  for (std::size_t r = 0; r < rule->size(); ++r)
    wave.values[r] = std::polar(1.0, 3.0 * rule->nodes[r][0]);
  auto c2 = forward_ft(wave, 3.0);
  for (std::size_t li = 0; li < c2.labels.size(); ++li) {
    const double want = c2.labels[li].k[0] == 3 ? 1.0 : 0.0;
    CHECK(std::abs(c2.mats[li](0, 0) - Complex(want)) < 1e-13);
  }
}

TEST_CASE("forward transform of a matrix coefficient on su2") {
  // f = xi_12 for twoL=1: the only nonzero coefficient entry is (2,1)
  // with value 1/d = 1/2 (Schur orthogonality).
  const GroupId g = GroupId::su2();
  auto rule = haar_quadrature(g, 4);
  const IrrepLabel xi = IrrepLabel::su2(1);

  GridFunction f;
  f.group = g;
  f.rule = rule;
  f.values.resize(rule->size());
  for (std::size_t r = 0; r < rule->size(); ++r)
    f.values[r] = irrep_matrix(g, xi, rule->nodes[r])(0, 1);

  auto coeffs = forward_ft(f, 1.5);
  for (std::size_t li = 0; li < coeffs.labels.size(); ++li) {
    const int d = coeffs.labels[li].dim();
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const double want =
            (coeffs.labels[li] == xi && a == 1 && b == 0) ? 0.5 : 0.0;
        CHECK(std::abs(coeffs.mats[li](a, b) - Complex(want)) < 1e-12);
      }
  }
}

TEST_CASE("inversion recovers band-limited functions at the nodes") {
  std::mt19937 rng(123);
  for (const GroupId g :
       {GroupId::torus(1), GroupId::torus(2), GroupId::su2()}) {
    auto rule = haar_quadrature(g, 6);
    auto f = random_bandlimited(g, rule, 3.0, rng);
    auto coeffs = forward_ft(f, 3.0);
    auto back = synthesize(coeffs, rule);
    double err = 0.0;
    for (std::size_t r = 0; r < rule->size(); ++r)
      err = std::max(err, std::abs(back.values[r] - f.values[r]));
    CHECK(err < 1e-10);
  }
}

TEST_CASE("single-entry coefficients synthesize a matrix coefficient") {
  const GroupId g = GroupId::su2();
  auto rule = haar_quadrature(g, 4);
  const IrrepLabel xi = IrrepLabel::su2(2);
  const int d = xi.dim();
  const int i = 0, j = 2;

  FourierCoefficients coeffs;
  coeffs.group = g;
  coeffs.lambda = xi.modulus(g);
  coeffs.labels = dual_enumerate(g, coeffs.lambda);
  for (const auto& eta : coeffs.labels)
    coeffs.mats.push_back(Matrix::Zero(eta.dim(), eta.dim()));
  coeffs.at(xi)(j, i) = 1.0 / d; // fhat = E_ji / d -> xi_ij

  for (std::size_t r = 0; r < rule->size(); r += 53) {
    const Complex got = inverse_ft(coeffs, rule->nodes[r]);
    const Complex want = irrep_matrix(g, xi, rule->nodes[r])(i, j);
    CHECK(std::abs(got - want) < 1e-12);
  }
}

TEST_CASE("plancherel identity") {
  const GroupId g = GroupId::su2();
  auto rule = haar_quadrature(g, 6);

  auto cc = forward_ft(constant_function(g, rule, Complex(0.0, 2.0)), 2.0);
  CHECK(plancherel_norm(cc) == doctest::Approx(2.0).epsilon(1e-12));

  // normalized matrix coefficient sqrt(d) xi_ij has unit norm
  const IrrepLabel xi = IrrepLabel::su2(2);
  GridFunction f;
  f.group = g;
  f.rule = rule;
  f.values.resize(rule->size());
  for (std::size_t r = 0; r < rule->size(); ++r)
    f.values[r] =
        std::sqrt(3.0) * irrep_matrix(g, xi, rule->nodes[r])(2, 1);
  auto coeffs = forward_ft(f, 2.0);
  CHECK(plancherel_norm(coeffs) == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(l2_norm(f) == doctest::Approx(1.0).epsilon(1e-11));

  FourierCoefficients empty;
  empty.group = g;
  CHECK(plancherel_norm(empty) == 0.0);
}

TEST_CASE("plancherel matches the quadrature norm on random data") {
  std::mt19937 rng(55);
  for (const GroupId g : {GroupId::torus(2), GroupId::su2()}) {
    auto rule = haar_quadrature(g, 8);
    for (int rep = 0; rep < 3; ++rep) {
      auto f = random_bandlimited(g, rule, 4.0, rng);
      auto coeffs = forward_ft(f, 4.0);
      CHECK(std::abs(plancherel_norm(coeffs) - l2_norm(f)) < 1e-10);
    }
  }
}

TEST_CASE("transforms are linear") {
  std::mt19937 rng(77);
  const GroupId g = GroupId::torus(2);
  auto rule = haar_quadrature(g, 6);
  auto f = random_bandlimited(g, rule, 3.0, rng);
  auto h = random_bandlimited(g, rule, 3.0, rng);
  const Complex a(0.3, -1.2), b(2.0, 0.7);

  GridFunction mix = f;
  for (std::size_t r = 0; r < rule->size(); ++r)
    mix.values[r] = a * f.values[r] + b * h.values[r];

  auto cf = forward_ft(f, 3.0), ch = forward_ft(h, 3.0),
       cm = forward_ft(mix, 3.0);
  for (std::size_t li = 0; li < cm.labels.size(); ++li) {
    const Matrix want = a * cf.mats[li] + b * ch.mats[li];
    CHECK((cm.mats[li] - want).cwiseAbs().maxCoeff() < 1e-11);
  }
}

TEST_CASE("insufficient rule bandlimit is a typed error") {
  const GroupId g = GroupId::torus(1);
  auto rule = haar_quadrature(g, 3);
  auto f = constant_function(g, rule, 1.0);
  CHECK_THROWS_AS(forward_ft(f, 2.0), QuadratureBandError);
  CHECK_NOTHROW(forward_ft(f, 1.5));
}
