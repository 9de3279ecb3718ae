#ifndef LIEWEYL_OPPARSE_HPP
#define LIEWEYL_OPPARSE_HPP

#include <string>

#include "lieweyl/operator_spec.hpp"

namespace lieweyl {

/// Parse the operator grammar
///   top := mult(expr) | spec(expr) | sym(expr, I|P)
///        | sum(top{,top}) | prod(top,top) | scale(number,top)
/// with located syntax and type diagnostics.  Body type rules: mult
/// bodies contain no t, spec bodies no coordinates, sym bodies both.
SpecPtr parse_operator(const std::string& src);

/// Canonical rendering; parse(print(spec)) reproduces the tree.
std::string print_operator(const OperatorSpec& spec);

/// Structural equality of operator trees.
bool spec_equal(const OperatorSpec& a, const OperatorSpec& b);

} // namespace lieweyl

#endif
