#ifndef LIEWEYL_EXPR_HPP
#define LIEWEYL_EXPR_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "lieweyl/errors.hpp"

namespace lieweyl {

/// Scalar expression over chart coordinates x1..x3 and the spectral
/// variable t (= |xi|).  Real-valued; powers are restricted to rational
/// exponents with base t so fractional powers stay single-valued.
enum class ExprKind : std::uint8_t { Number, Var, Add, Sub, Mul, Div, Neg, Pow, Call };
enum class VarId : std::uint8_t { X1, X2, X3, T };
enum class FuncId : std::uint8_t { Sin, Cos, Exp };

struct ScalarExpr;
using ExprPtr = std::shared_ptr<const ScalarExpr>;

struct ScalarExpr {
  ExprKind kind = ExprKind::Number;
  double number = 0.0;            // Number
  VarId var = VarId::T;           // Var
  FuncId func = FuncId::Sin;      // Call
  std::int64_t pnum = 1, pden = 1; // Pow exponent
  ExprPtr a, b;
  std::ptrdiff_t src_off = -1;    // byte offset in source text, or -1
};

ExprPtr expr_number(double v);
ExprPtr expr_var(VarId v);
ExprPtr expr_add(ExprPtr a, ExprPtr b);
ExprPtr expr_sub(ExprPtr a, ExprPtr b);
ExprPtr expr_mul(ExprPtr a, ExprPtr b);
ExprPtr expr_div(ExprPtr a, ExprPtr b);
ExprPtr expr_neg(ExprPtr a);
ExprPtr expr_pow_t(std::int64_t pnum, std::int64_t pden);
ExprPtr expr_call(FuncId f, ExprPtr a);

/// Evaluate at the given coordinates and spectral value.
double expr_eval(const ScalarExpr& e, const std::array<double, 3>& coords,
                 double t);

bool expr_uses_coords(const ScalarExpr& e);
bool expr_uses_t(const ScalarExpr& e);

/// Structural equality (source offsets ignored).
bool expr_equal(const ScalarExpr& a, const ScalarExpr& b);

/// Canonical rendering; parse(print(e)) reproduces e structurally.
std::string expr_print(const ScalarExpr& e);

/// Conservative coordinate bandlimit: the expression is a trigonometric
/// polynomial of this degree in the chart coordinates.  Infinity when no
/// finite band can be certified (the oversampling margin then applies).
double expr_coord_band(const ScalarExpr& e);

/// Find a variable of the given class in the tree, for type diagnostics.
const ScalarExpr* expr_find_var(const ScalarExpr& e, bool want_t);

/// Parse a scalar expression (the full input must be consumed).
ExprPtr parse_expression(const std::string& src);

} // namespace lieweyl

#endif
