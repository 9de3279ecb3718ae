#ifndef LIEWEYL_WEYL_HPP
#define LIEWEYL_WEYL_HPP

#include <cstdint>
#include <optional>

#include "lieweyl/quantize.hpp"

namespace lieweyl {

/// Averaged quantum limit QL / Vol(T*S(G)): the co-sphere average of the
/// principal symbol, carried in closed form per catalog family.
struct ReferenceLimit {
  enum class Kind : std::uint8_t {
    MultiplicationAvg,
    SpectralAvg,
    ProductAvg,
    None
  };
  Kind kind = Kind::None;
  double value = 0.0;

  bool present() const { return kind != Kind::None; }
};

/// Closed-form reference limit for catalog specs: Multiplication gives
/// the Haar integral of kappa; Spectral needs the declared limit f_inf;
/// Product(Multiplication, Spectral) gives f_inf times the Haar integral.
ReferenceLimit reference_limit(const OperatorSpec& spec, const RulePtr& rule,
                               std::optional<double> f_inf);

/// One record of a Weyl scan.
struct WeylScanRow {
  double lambda = 0.0;
  std::int64_t N = 0; // counting function
  double T = 0.0;     // partial trace
  double avg = 0.0;   // T / N
  std::optional<double> ref;
  std::optional<double> abs_err;
};

/// Per-irrep integral with its imaginary residual (reported, must be
/// tiny for self-adjoint catalog operators).
struct TraceIntegral {
  double value = 0.0;
  double imag_abs = 0.0;
};

/// integral over G of Tr sigma_glob(x, xi) dx.  Closed-form when the spec
/// admits one; otherwise extracted numerically (the rule must then
/// resolve products of coefficients at |xi|).
TraceIntegral trace_integral(const OperatorSpec& spec, const GroupId& g,
                             const IrrepLabel& xi, const RulePtr& rule);

/// d_xi (A xi_ij, xi_ij) = (A sqrt(d) xi_ij, sqrt(d) xi_ij) by quadrature.
Complex matrix_element(const OperatorSpec& spec, const GroupId& g,
                       const BasisIndex& which, const RulePtr& rule);

/// Residual of the core identity
///   sum_ij (A xi_ij, xi_ij) = integral Tr sigma_glob(x,xi) dx,
/// the left side by quadrature matrix elements, the right side by the
/// symbol integral; both computed independently.
struct CoreIdentityResult {
  Complex lhs{0.0, 0.0};
  Complex rhs{0.0, 0.0};
  double residual = 0.0;
};
CoreIdentityResult verify_core_identity(const OperatorSpec& spec,
                                        const GroupId& g,
                                        const IrrepLabel& xi,
                                        const RulePtr& rule);

/// Eigenvalue counting function of sqrt(L_G): multiplicity-counted,
/// N(lambda) = sum_{|xi| <= lambda} d_xi^2.
std::int64_t counting_function(const GroupId& g, double lambda);

/// Partial trace T(lambda) = sum_{|xi| <= lambda} d_xi Tr-integral.
TraceIntegral partial_trace(const OperatorSpec& spec, const GroupId& g,
                            double lambda, const RulePtr& rule,
                            int threads = 1);

/// Weyl scan over an increasing lambda grid; each irrep's integral is
/// computed once and prefix sums run in fixed dual-enumeration order
/// with compensated summation.
std::vector<WeylScanRow> weyl_scan(const OperatorSpec& spec, const GroupId& g,
                                   const std::vector<double>& lambda_grid,
                                   const RulePtr& rule,
                                   const ReferenceLimit& ref,
                                   int threads = 1);

/// Corollary sequence A_n = d_xi Tr-integral in dual-enumeration order
/// with its counting-weighted running average (no convergence claim).
struct CorollaryTerm {
  IrrepLabel label;
  double A_n = 0.0;
  double cesaro = 0.0;
};
std::vector<CorollaryTerm> corollary_sequence(const OperatorSpec& spec,
                                              const GroupId& g,
                                              double lambda_max,
                                              const RulePtr& rule,
                                              int threads = 1);

/// Growth-bound verdict for positive-order specs with Tr sigma >= 0.
struct GrowthResult {
  double slope = 0.0;   // least-squares slope of log T vs log lambda
  double constant = 0.0; // max_grid T(lambda) / lambda^{n+m}
  bool bound_ok = false;
  bool degenerate = false; // too few usable points (e.g. zero symbol)
  std::vector<WeylScanRow> rows;
};

/// Checks Tr sigma(x, xi) >= -1e-12 at all nodes and enumerated irreps
/// (PositivityError identifies the witness otherwise), then fits
/// log T(lambda) against log lambda over the upper half of the grid
/// (at least 6 points) and tests the slope against n + m + 0.1.
GrowthResult growth_check(const OperatorSpec& spec, const GroupId& g,
                          const std::vector<double>& lambda_grid,
                          const RulePtr& rule, double order_m,
                          int threads = 1);

} // namespace lieweyl

#endif
