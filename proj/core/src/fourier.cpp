#include "lieweyl/fourier.hpp"

#include <cmath>

#include "lieweyl/wigner.hpp"

namespace lieweyl {

namespace {

constexpr std::size_t kChunk = 512;

int max_twoL(const std::vector<IrrepLabel>& labels) {
  int m = 0;
  for (const auto& l : labels)
    if (l.kind == GroupKind::SU2) m = std::max(m, static_cast<int>(l.twoL));
  return m;
}

// Fill per-label coefficient tables for a node range.  Table rows hold
// vec(xi(x)) column-major; SU(2) shares one little-d stack per node.
void fill_tables(const QuadratureRule& rule,
                 const std::vector<IrrepLabel>& labels, std::size_t first,
                 std::size_t count, std::vector<Matrix>& tables) {
  const GroupId& g = rule.group;
  tables.resize(labels.size());
  for (std::size_t li = 0; li < labels.size(); ++li) {
    const int d = labels[li].dim();
    tables[li].resize(static_cast<Eigen::Index>(count),
                      static_cast<Eigen::Index>(d) * d);
  }
  if (g.is_torus()) {
    const int n = g.dim();
    for (std::size_t r = 0; r < count; ++r) {
      const GroupElement& x = rule.nodes[first + r];
      for (std::size_t li = 0; li < labels.size(); ++li) {
        double phase = 0.0;
        for (int i = 0; i < n; ++i)
          phase +=
              static_cast<double>(labels[li].k[static_cast<std::size_t>(i)]) *
              x[i];
        tables[li](static_cast<Eigen::Index>(r), 0) = std::polar(1.0, phase);
      }
    }
    return;
  }
  const int tm = max_twoL(labels);
  for (std::size_t r = 0; r < count; ++r) {
    const GroupElement& x = rule.nodes[first + r];
    const auto stack = wigner_little_d_stack(tm, x[1]);
    for (std::size_t li = 0; li < labels.size(); ++li) {
      const int twoL = static_cast<int>(labels[li].twoL);
      const Matrix D = wigner_apply_phases(
          stack[static_cast<std::size_t>(twoL)], twoL, x[0], x[2]);
      tables[li].row(static_cast<Eigen::Index>(r)) =
          Eigen::Map<const Eigen::VectorXcd>(D.data(), D.size()).transpose();
    }
  }
}

} // namespace

const Matrix* FourierCoefficients::find(const IrrepLabel& xi) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == xi) return &mats[i];
  return nullptr;
}

Matrix& FourierCoefficients::at(const IrrepLabel& xi) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == xi) return mats[i];
  throw ArgumentError("no coefficient stored for " + xi.to_string());
}

Matrix coefficient_table(const QuadratureRule& rule, const IrrepLabel& xi,
                         std::size_t first, std::size_t count) {
  std::vector<Matrix> tables;
  fill_tables(rule, {xi}, first, count, tables);
  return std::move(tables[0]);
}

Matrix coefficient_batch(const QuadratureRule& rule, const IrrepLabel& xi) {
  // vec(xi(x)) column-major has xi_ij at slot j*d+i, which is exactly the
  // requested column layout.
  return coefficient_table(rule, xi, 0, rule.size());
}

Matrix BatchCoefficients::coefficient(std::size_t which, std::size_t q) const {
  const auto& block = blocks[which];
  const int d = labels[which].dim();
  return Eigen::Map<const Matrix>(block.col(static_cast<Eigen::Index>(q)).eval().data(), d, d)
      .transpose();
}

BatchCoefficients forward_ft_batch(const QuadratureRule& rule,
                                   const std::vector<IrrepLabel>& labels,
                                   const Matrix& G) {
  if (static_cast<std::size_t>(G.rows()) != rule.size())
    throw ArgumentError("value count does not match quadrature rule");
  BatchCoefficients out;
  out.labels = labels;
  out.blocks.resize(labels.size());
  for (std::size_t li = 0; li < labels.size(); ++li) {
    const int d = labels[li].dim();
    out.blocks[li] = Matrix::Zero(static_cast<Eigen::Index>(d) * d, G.cols());
  }
  std::vector<Matrix> tables;
  for (std::size_t first = 0; first < rule.size(); first += kChunk) {
    const std::size_t count = std::min(kChunk, rule.size() - first);
    fill_tables(rule, labels, first, count, tables);
    Matrix WG = G.middleRows(static_cast<Eigen::Index>(first),
                             static_cast<Eigen::Index>(count));
    for (std::size_t r = 0; r < count; ++r)
      WG.row(static_cast<Eigen::Index>(r)) *= rule.weights[first + r];
    for (std::size_t li = 0; li < labels.size(); ++li)
      out.blocks[li].noalias() += tables[li].adjoint() * WG;
  }
  return out;
}

Matrix synthesize_batch(const QuadratureRule& rule,
                        const BatchCoefficients& coeffs) {
  Eigen::Index p = 0;
  for (const auto& b : coeffs.blocks) p = std::max(p, b.cols());
  Matrix G = Matrix::Zero(static_cast<Eigen::Index>(rule.size()), p);
  std::vector<Matrix> tables;
  for (std::size_t first = 0; first < rule.size(); first += kChunk) {
    const std::size_t count = std::min(kChunk, rule.size() - first);
    fill_tables(rule, coeffs.labels, first, count, tables);
    auto rows = G.middleRows(static_cast<Eigen::Index>(first),
                             static_cast<Eigen::Index>(count));
    for (std::size_t li = 0; li < coeffs.labels.size(); ++li) {
      const double d = coeffs.labels[li].dim();
      rows.noalias() += d * (tables[li] * coeffs.blocks[li]);
    }
  }
  return G;
}

void scale_batch(BatchCoefficients& coeffs,
                 const std::vector<Complex>& factors) {
  for (std::size_t li = 0; li < coeffs.blocks.size(); ++li)
    coeffs.blocks[li] *= factors[li];
}

FourierCoefficients forward_ft(const GridFunction& f, double lambda) {
  if (!f.rule) throw ArgumentError("grid function has no quadrature rule");
  if (static_cast<double>(f.rule->bandlimit) + 1e-9 < 2.0 * lambda)
    throw QuadratureBandError(
        "rule bandlimit " + std::to_string(f.rule->bandlimit) +
        " insufficient for transform at lambda " + std::to_string(lambda));
  FourierCoefficients out;
  out.group = f.group;
  out.lambda = lambda;
  out.labels = dual_enumerate(f.group, lambda);

  Matrix G(static_cast<Eigen::Index>(f.values.size()), 1);
  for (std::size_t i = 0; i < f.values.size(); ++i)
    G(static_cast<Eigen::Index>(i), 0) = f.values[i];
  auto batch = forward_ft_batch(*f.rule, out.labels, G);
  out.mats.resize(out.labels.size());
  for (std::size_t li = 0; li < out.labels.size(); ++li)
    out.mats[li] = batch.coefficient(li, 0);
  return out;
}

Complex inverse_ft(const FourierCoefficients& coeffs, const GroupElement& x) {
  Complex acc = 0.0;
  if (coeffs.group.is_torus()) {
    for (std::size_t li = 0; li < coeffs.labels.size(); ++li) {
      double phase = 0.0;
      for (int i = 0; i < coeffs.group.dim(); ++i)
        phase += static_cast<double>(
                     coeffs.labels[li].k[static_cast<std::size_t>(i)]) *
                 x[i];
      acc += std::polar(1.0, phase) * coeffs.mats[li](0, 0);
    }
    return acc;
  }
  const int tm = max_twoL(coeffs.labels);
  const auto stack = wigner_little_d_stack(tm, x[1]);
  for (std::size_t li = 0; li < coeffs.labels.size(); ++li) {
    const int twoL = static_cast<int>(coeffs.labels[li].twoL);
    const Matrix D = wigner_apply_phases(stack[static_cast<std::size_t>(twoL)],
                                         twoL, x[0], x[2]);
    acc += static_cast<double>(twoL + 1) * (D * coeffs.mats[li]).trace();
  }
  return acc;
}

GridFunction synthesize(const FourierCoefficients& coeffs,
                        const RulePtr& rule) {
  BatchCoefficients batch;
  batch.labels = coeffs.labels;
  batch.blocks.resize(coeffs.labels.size());
  for (std::size_t li = 0; li < coeffs.labels.size(); ++li) {
    const int d = coeffs.labels[li].dim();
    Matrix block(static_cast<Eigen::Index>(d) * d, 1);
    // slot col*d+row must hold A(col,row)
    for (int col = 0; col < d; ++col)
      for (int row = 0; row < d; ++row)
        block(static_cast<Eigen::Index>(col) * d + row, 0) =
            coeffs.mats[li](col, row);
    batch.blocks[li] = std::move(block);
  }
  Matrix G = synthesize_batch(*rule, batch);
  GridFunction out;
  out.group = coeffs.group;
  out.rule = rule;
  out.values.resize(rule->size());
  for (std::size_t i = 0; i < rule->size(); ++i)
    out.values[i] = G(static_cast<Eigen::Index>(i), 0);
  return out;
}

double plancherel_norm(const FourierCoefficients& coeffs) {
  double acc = 0.0;
  for (std::size_t li = 0; li < coeffs.labels.size(); ++li)
    acc += coeffs.labels[li].dim() * coeffs.mats[li].squaredNorm();
  return std::sqrt(acc);
}

double l2_norm(const GridFunction& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    acc += f.rule->weights[i] * std::norm(f.values[i]);
  return std::sqrt(acc);
}

} // namespace lieweyl
