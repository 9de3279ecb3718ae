#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lieweyl/opparse.hpp"
#include "lieweyl/quantize.hpp"

using namespace lieweyl;

namespace {

GridFunction random_bandlimited(const GroupId& g, const RulePtr& rule,
                                double lambda, std::mt19937& rng) {
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
  return synthesize(coeffs, rule);
}

double max_grid_diff(const GridFunction& a, const GridFunction& b) {
  double m = 0.0;
  for (std::size_t r = 0; r < a.values.size(); ++r)
    m = std::max(m, std::abs(a.values[r] - b.values[r]));
  return m;
}

} // namespace

TEST_CASE("spectral symbols are f(mu) on the identity, x-independent") {
  // f(t) = 1/(1+t^2) applied to sqrt(L) has symbol 1/(1+mu) I
  const GroupId g = GroupId::su2();
  auto rule = haar_quadrature(g, 6);
  const auto spec = parse_operator("spec(1/(1+t^2))");
  const auto irreps = dual_enumerate(g, 2.0);

  const SymbolField sigma = symbol_of(*spec, irreps, rule);
  CHECK(sigma.x_independent);
  const std::size_t idx = sigma.index_of(IrrepLabel::su2(2)); // mu = 2
  const Matrix want = Matrix::Identity(3, 3) / 3.0;
  CHECK((sigma.at(idx, 0) - want).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("multiplication symbols are kappa(x) I") {
  const GroupId g = GroupId::torus(1);
  auto rule = haar_quadrature(g, 4);
  const auto spec = parse_operator("mult(cos(x1))");
  const auto irreps = dual_enumerate(g, 2.0);
  const SymbolField sigma = symbol_of(*spec, irreps, rule);
  CHECK(!sigma.x_independent);
  for (std::size_t li = 0; li < irreps.size(); ++li)
    for (std::size_t r = 0; r < rule->size(); ++r)
      CHECK(std::abs(sigma.at(li, r)(0, 0) -
                     Complex(std::cos(rule->nodes[r][0]))) < 1e-15);
}

TEST_CASE("scaling by zero kills the symbol") {
  const GroupId g = GroupId::su2();
  auto rule = haar_quadrature(g, 4);
  const auto spec = parse_operator("scale(0, mult(cos(x1)))");
  const SymbolField sigma = symbol_of(*spec, dual_enumerate(g, 2.0), rule);
  for (std::size_t li = 0; li < sigma.irreps.size(); ++li)
    for (std::size_t r = 0; r < rule->size(); ++r)
      CHECK(sigma.at(li, r).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("identity symbol reproduces the inversion formula") {
  std::mt19937 rng(11);
  for (const GroupId g : {GroupId::torus(1), GroupId::su2()}) {
    auto rule = haar_quadrature(g, 6);
    const auto irreps = dual_enumerate(g, 3.0);
    const SymbolField sigma = identity_symbol(g, irreps, rule);
    auto f = random_bandlimited(g, rule, 3.0, rng);
    auto af = quantize_apply(sigma, f);
    CHECK(max_grid_diff(af, f) < 1e-10);
  }
}

TEST_CASE("multiplication symbol acts pointwise through quantisation") {
  std::mt19937 rng(12);
  const GroupId g = GroupId::torus(2);
  auto rule = haar_quadrature(g, 8);
  const auto spec = parse_operator("mult(cos(x1)*sin(x2))");
  const auto irreps = dual_enumerate(g, 3.0);
  const SymbolField sigma = symbol_of(*spec, irreps, rule);

  auto f = random_bandlimited(g, rule, 3.0, rng);
  auto af = quantize_apply(sigma, f);
  GridFunction want = f;
  for (std::size_t r = 0; r < rule->size(); ++r)
    want.values[r] *= std::cos(rule->nodes[r][0]) * std::sin(rule->nodes[r][1]);
  CHECK(max_grid_diff(af, want) < 1e-10);
}

TEST_CASE("matrix coefficients are eigenfunctions of spectral operators") {
  const GroupId g = GroupId::su2();
  auto rule = haar_quadrature(g, 6);
  const auto spec = parse_operator("spec(t^2/(1+t^2))");
  const IrrepLabel xi = IrrepLabel::su2(2);
  const auto irreps = dual_enumerate(g, xi.modulus(g));
  const SymbolField sigma = symbol_of(*spec, irreps, rule);

  const double fval = [&] {
    const double mu = xi.mu(g);
    return mu / (1.0 + mu);
  }();
  GridFunction f;
  f.group = g;
  f.rule = rule;
  f.values.resize(rule->size());
  for (std::size_t r = 0; r < rule->size(); ++r)
    f.values[r] =
        std::sqrt(3.0) * irrep_matrix(g, xi, rule->nodes[r])(1, 2);
  auto af = quantize_apply(sigma, f);
  GridFunction want = f;
  for (auto& v : want.values) v *= fval;
  CHECK(max_grid_diff(af, want) < 1e-10);
}

TEST_CASE("extraction agrees with closed-form symbols") {
  const GroupId g = GroupId::su2();
  auto rule = haar_quadrature(g, 8);
  const GroupElement x = rule->nodes[rule->size() / 3];

  // spectral: f(|xi|) I to 1e-12
  const auto spec = parse_operator("spec(1/(1+t^2))");
  for (const auto& xi : dual_enumerate(g, 3.0)) {
    const Matrix got = extract_symbol(*spec, g, xi, x, rule);
    const double f = 1.0 / (1.0 + xi.mu(g));
    CHECK((got - f * Matrix::Identity(xi.dim(), xi.dim()))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }

  // multiplication: kappa(x) I to 1e-10
  const auto mult = parse_operator("mult(cos(x1))");
  for (const auto& xi : dual_enumerate(g, 2.0)) {
    const Matrix got = extract_symbol(*mult, g, xi, x, rule);
    CHECK((got - std::cos(x[0]) * Matrix::Identity(xi.dim(), xi.dim()))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
  }
}

TEST_CASE("product symbol on the torus is kappa(x) f(|k|)") {
  const GroupId g = GroupId::torus(1);
  auto rule = haar_quadrature(g, 12);
  const auto spec = parse_operator("prod(mult(cos(x1)), spec(t^2/(1+t^2)))");
  const GroupElement x = rule->nodes[5];
  for (const auto& xi : dual_enumerate(g, 4.0)) {
    const double k2 = xi.mu(g);
    const Complex want = std::cos(x[0]) * (k2 / (1.0 + k2));
    const Matrix got = extract_symbol(*spec, g, xi, x, rule);
    CHECK(std::abs(got(0, 0) - want) < 1e-11);
  }
}

TEST_CASE("quantisation equivalence: symbol route vs direct action") {
  std::mt19937 rng(2024);
  const std::vector<std::string> catalog = {
      "mult(cos(x1))",
      "spec(1/(1+t^2))",
      "sum(mult(cos(x1)), scale(2, spec(t^2/(1+t^2))))",
      "prod(mult(cos(x1)), spec(1/(1+t^2)))",
  };
  for (const GroupId g : {GroupId::torus(1), GroupId::su2()}) {
    auto rule = haar_quadrature(g, 10);
    const double lambda = 2.0;
    const auto irreps = dual_enumerate(g, lambda);
    for (const auto& text : catalog) {
      const auto spec = parse_operator(text);
      const SymbolField sigma = symbol_of(*spec, irreps, rule);
      for (int rep = 0; rep < 2; ++rep) {
        auto f = random_bandlimited(g, rule, lambda, rng);
        auto via_symbol = quantize_apply(sigma, f);

        FunctionBatch in;
        in.rule = rule;
        in.band = lambda;
        Matrix G(static_cast<Eigen::Index>(f.values.size()), 1);
        for (std::size_t r = 0; r < f.values.size(); ++r)
          G(static_cast<Eigen::Index>(r), 0) = f.values[r];
        in.grid = std::move(G);
        FunctionBatch direct = apply_operator(*spec, std::move(in));
        ensure_grid(direct);

        double err = 0.0;
        for (std::size_t r = 0; r < rule->size(); ++r)
          err = std::max(err,
                         std::abs(via_symbol.values[r] -
                                  (*direct.grid)(static_cast<Eigen::Index>(r), 0)));
        CHECK(err < 1e-9);
      }
    }
  }
}

TEST_CASE("extraction matches symbol_of at the nodes") {
  const GroupId g = GroupId::su2();
  auto rule = haar_quadrature(g, 8);
  const auto irreps = dual_enumerate(g, 2.0);
  for (const std::string text :
       {"mult(cos(x3))", "spec(t^2/(1+t^2))", "sym(1+t^2, P)"}) {
    const auto spec = parse_operator(text);
    const SymbolField sigma = symbol_of(*spec, irreps, rule);
    for (std::size_t li = 0; li < irreps.size(); ++li) {
      const auto extracted = extract_symbol_at_nodes(*spec, g, irreps[li], rule);
      for (std::size_t r = 0; r < rule->size(); r += 211)
        CHECK((extracted[r] - sigma.at(li, r)).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("conjugation invariance of the symbol trace") {
  const GroupId g = GroupId::su2();
  auto rule = haar_quadrature(g, 6);
  const auto spec = parse_operator("sum(mult(cos(x3)), spec(1/(1+t^2)))");
  const auto irreps = dual_enumerate(g, 2.0);
  const SymbolField sigma = symbol_of(*spec, irreps, rule);
  for (std::size_t li = 0; li < irreps.size(); ++li)
    for (std::size_t r = 0; r < rule->size(); r += 97) {
      const Matrix D = irrep_matrix(g, irreps[li], rule->nodes[r]);
      const Matrix s = sigma.at(li, r);
      const Complex a = (D * s * D.adjoint()).trace();
      CHECK(std::abs(a - s.trace()) < 1e-12);
    }
}

TEST_CASE("numerically extracted spectral symbols are x-independent") {
  const GroupId g = GroupId::su2();
  auto rule = haar_quadrature(g, 6);
  const auto spec = parse_operator("spec(t^2/(1+t^2))");
  for (const auto& xi : dual_enumerate(g, 2.0)) {
    const auto mats = extract_symbol_at_nodes(*spec, g, xi, rule);
    double dev = 0.0;
    for (std::size_t r = 1; r < mats.size(); r += 173)
      dev = std::max(dev, (mats[r] - mats[0]).cwiseAbs().maxCoeff());
    CHECK(dev < 1e-12);
  }
}

TEST_CASE("order reduction") {
  const GroupId g = GroupId::su2();
  auto rule = haar_quadrature(g, 4);
  const auto irreps = dual_enumerate(g, 3.0);

  // sigma = |xi|^m I reduces to I away from the trivial rep, 0 on it
  const SpecPtr spec = make_symbol_rule(expr_pow_t(1, 1),
                                        MatrixFactor::Identity, 1.0);
  SymbolField sigma = symbol_of(*spec, irreps, rule);
  const SymbolField reduced = reduce_order(sigma);
  CHECK(reduced.order_hint == 0.0);
  for (std::size_t li = 0; li < irreps.size(); ++li) {
    const int d = irreps[li].dim();
    const Matrix want = irreps[li].is_trivial()
                            ? Matrix::Zero(d, d).eval()
                            : Matrix::Identity(d, d).eval();
    CHECK((reduced.at(li, 0) - want).cwiseAbs().maxCoeff() < 1e-14);
  }

  // sigma = |xi|^m P reduces to P away from the trivial rep
  const SpecPtr specp = make_symbol_rule(expr_pow_t(1, 1),
                                         MatrixFactor::FirstProjection, 1.0);
  const SymbolField reducedp = reduce_order(symbol_of(*specp, irreps, rule));
  for (std::size_t li = 0; li < irreps.size(); ++li) {
    const int d = irreps[li].dim();
    Matrix want = Matrix::Zero(d, d);
    if (!irreps[li].is_trivial()) want(0, 0) = 1.0;
    CHECK((reducedp.at(li, 0) - want).cwiseAbs().maxCoeff() < 1e-14);
  }

  // reduce after multiplying by |xi|^m is the identity on symbols
  // vanishing at the trivial rep
  SymbolField base = symbol_of(*parse_operator("sym(1+t^2, P)"), irreps, rule);
  SymbolField lifted = base;
  for (std::size_t li = 0; li < irreps.size(); ++li) {
    if (irreps[li].is_trivial())
      for (auto& m : lifted.mats[li]) m.setZero();
    else
      for (auto& m : lifted.mats[li]) m *= std::pow(irreps[li].modulus(g), 1.5);
  }
  lifted.order_hint = 1.5;
  const SymbolField back = reduce_order(lifted);
  for (std::size_t li = 0; li < irreps.size(); ++li) {
    const Matrix want = irreps[li].is_trivial()
                            ? Matrix::Zero(irreps[li].dim(), irreps[li].dim()).eval()
                            : base.at(li, 0).eval();
    CHECK((back.at(li, 0) - want).cwiseAbs().maxCoeff() < 1e-12);
  }

  CHECK_THROWS_AS(reduce_order(reduced), ArgumentError); // m must be > 0
}

TEST_CASE("bandlimit mismatch and evaluation failures are typed") {
  const GroupId g = GroupId::torus(1);
  auto coarse = haar_quadrature(g, 2);
  const auto irreps = dual_enumerate(g, 4.0);
  const SymbolField sigma = identity_symbol(g, irreps, coarse);
  GridFunction f;
  f.group = g;
  f.rule = coarse;
  f.values.assign(coarse->size(), 1.0);
  // applying a symbol over |xi| <= 4 needs rule bandlimit >= 8
  CHECK_THROWS_AS(quantize_apply(sigma, f), QuadratureBandError);

  // division by zero at a node is located
  auto rule = haar_quadrature(g, 4);
  const auto bad = parse_operator("mult(1/sin(x1))"); // sin(0) = 0 at node 0
  try {
    symbol_of(*bad, dual_enumerate(g, 1.0), rule);
    FAIL("expected an evaluation error");
  } catch (const EvalError& e) {
    CHECK(e.node() == 0);
  }
}

TEST_CASE("kernel quantisation check on the torus") {
  for (const GroupId g : {GroupId::torus(1), GroupId::torus(2)}) {
    auto rule = haar_quadrature(g, 8);
    const GroupElement x = rule->nodes[3];

    const auto spectral = parse_operator("spec(t^2/(1+t^2))");
    const auto mult = parse_operator("mult(cos(x1))");
    const auto zero = parse_operator("scale(0, spec(1))");
    for (const auto& xi : dual_enumerate(g, 3.0)) {
      CHECK(kernel_symbol_check(*spectral, g, xi, x, rule) < 1e-10);
      CHECK(kernel_symbol_check(*mult, g, xi, x, rule) < 1e-8);
      CHECK(kernel_symbol_check(*zero, g, xi, x, rule) < 1e-15);
    }
    const auto prod = parse_operator("prod(mult(cos(x1)), spec(1/(1+t^2)))");
    const IrrepLabel klabel = g.kind == GroupKind::Torus1
                                  ? IrrepLabel::torus1(2)
                                  : IrrepLabel::torus2(1, 1);
    CHECK(kernel_symbol_check(*prod, g, klabel, x, rule) < 1e-9);
  }
  CHECK_THROWS_AS(kernel_symbol_check(*parse_operator("spec(1)"),
                                      GroupId::su2(), IrrepLabel::su2(1),
                                      identity_element(GroupId::su2()),
                                      haar_quadrature(GroupId::su2(), 2)),
                  UnsupportedError);
}
