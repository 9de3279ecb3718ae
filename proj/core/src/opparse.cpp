#include "lieweyl/opparse.hpp"

#include <cstdio>
#include <cstdlib>

#include "parse_detail.hpp"

namespace lieweyl {

namespace {

using detail::Cursor;

SpecPtr parse_top(Cursor& c) {
  detail::DepthGuard guard(c);
  c.skip_ws();
  const std::size_t off = c.pos;
  const std::string kw = c.ident();
  if (kw.empty())
    throw ExprError("syntax error", off, "mult|spec|sym|sum|prod|scale");

  if (kw == "mult") {
    c.expect('(', "(");
    ExprPtr body = detail::parse_expr_at(c);
    c.expect(')', ")");
    return make_multiplication(std::move(body));
  }
  if (kw == "spec") {
    c.expect('(', "(");
    ExprPtr body = detail::parse_expr_at(c);
    c.expect(')', ")");
    return make_spectral(std::move(body));
  }
  if (kw == "sym") {
    c.expect('(', "(");
    ExprPtr body = detail::parse_expr_at(c);
    c.expect(',', ",");
    c.skip_ws();
    const std::size_t foff = c.pos;
    const std::string f = c.ident();
    MatrixFactor factor;
    if (f == "I") factor = MatrixFactor::Identity;
    else if (f == "P") factor = MatrixFactor::FirstProjection;
    else throw ExprError("syntax error", foff, "I|P");
    c.expect(')', ")");
    return make_symbol_rule(std::move(body), factor);
  }
  if (kw == "sum") {
    c.expect('(', "(");
    std::vector<SpecPtr> terms;
    terms.push_back(parse_top(c));
    while (c.eat(',')) terms.push_back(parse_top(c));
    c.expect(')', ")");
    return make_sum(std::move(terms));
  }
  if (kw == "prod") {
    c.expect('(', "(");
    SpecPtr outer = parse_top(c);
    c.expect(',', ",");
    SpecPtr inner = parse_top(c);
    c.expect(')', ")");
    return make_product(std::move(outer), std::move(inner));
  }
  if (kw == "scale") {
    c.expect('(', "(");
    const double v = detail::parse_signed_number_at(c);
    c.expect(',', ",");
    SpecPtr child = parse_top(c);
    c.expect(')', ")");
    return make_scale(Complex{v, 0.0}, std::move(child));
  }
  throw ExprError("unknown combinator '" + kw + "'", off,
                  "mult|spec|sym|sum|prod|scale");
}

std::string print_number(double v) {
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

} // namespace

SpecPtr parse_operator(const std::string& src) {
  Cursor c(src);
  if (c.at_end()) throw ExprError("empty operator text", 0, "combinator");
  SpecPtr spec = parse_top(c);
  if (!c.at_end())
    throw ExprError("trailing input", c.pos, "end of input");
  return spec;
}

std::string print_operator(const OperatorSpec& spec) {
  switch (spec.kind) {
    case SpecKind::Multiplication:
      return "mult(" + expr_print(*spec.expr) + ")";
    case SpecKind::Spectral: return "spec(" + expr_print(*spec.expr) + ")";
    case SpecKind::SymbolRule:
      return "sym(" + expr_print(*spec.expr) + "," +
             (spec.factor == MatrixFactor::Identity ? "I" : "P") + ")";
    case SpecKind::Sum: {
      std::string out = "sum(";
      for (std::size_t i = 0; i < spec.children.size(); ++i) {
        if (i) out += ',';
        out += print_operator(*spec.children[i]);
      }
      return out + ")";
    }
    case SpecKind::Product:
      return "prod(" + print_operator(*spec.children[0]) + "," +
             print_operator(*spec.children[1]) + ")";
    case SpecKind::Scale: {
      if (spec.scale_factor.imag() != 0.0)
        throw ArgumentError("complex scale factors have no surface syntax");
      return "scale(" + print_number(spec.scale_factor.real()) + "," +
             print_operator(*spec.children[0]) + ")";
    }
  }
  throw ArgumentError("unhandled spec kind");
}

bool spec_equal(const OperatorSpec& a, const OperatorSpec& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case SpecKind::Multiplication:
    case SpecKind::Spectral: return expr_equal(*a.expr, *b.expr);
    case SpecKind::SymbolRule:
      return a.factor == b.factor && expr_equal(*a.expr, *b.expr);
    case SpecKind::Scale:
      if (a.scale_factor != b.scale_factor) return false;
      break;
    default: break;
  }
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!spec_equal(*a.children[i], *b.children[i])) return false;
  return true;
}

} // namespace lieweyl
