#include "lieweyl/expr.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <optional>

#include "parse_detail.hpp"

namespace lieweyl {

namespace {

ExprPtr node(ScalarExpr e) { return std::make_shared<ScalarExpr>(std::move(e)); }

const double kInf = std::numeric_limits<double>::infinity();

// Render a double with the fewest digits that round-trip exactly.
std::string print_number(double v) {
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

int precedence(const ScalarExpr& e) {
  switch (e.kind) {
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul:
    case ExprKind::Div:
    case ExprKind::Neg: return 2;
    case ExprKind::Pow: return 3;
    default: return 4;
  }
}

void print_rec(const ScalarExpr& e, std::string& out) {
  auto child = [&](const ScalarExpr& c, bool needs_paren) {
    if (needs_paren) out += '(';
    print_rec(c, out);
    if (needs_paren) out += ')';
  };
  const int p = precedence(e);
  switch (e.kind) {
    case ExprKind::Number: out += print_number(e.number); break;
    case ExprKind::Var:
      switch (e.var) {
        case VarId::X1: out += "x1"; break;
        case VarId::X2: out += "x2"; break;
        case VarId::X3: out += "x3"; break;
        case VarId::T: out += "t"; break;
      }
      break;
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div:
      // a '/' straight after an exponent would be folded into the
      // rational, so parenthesize a Pow on the left of a division
      child(*e.a, precedence(*e.a) < p ||
                      (e.kind == ExprKind::Div && e.a->kind == ExprKind::Pow));
      out += e.kind == ExprKind::Add   ? '+'
             : e.kind == ExprKind::Sub ? '-'
             : e.kind == ExprKind::Mul ? '*'
                                       : '/';
      child(*e.b, precedence(*e.b) <= p);
      break;
    case ExprKind::Neg:
      // unary minus binds to a single factor; -(a*b) keeps its parens
      out += '-';
      child(*e.a, precedence(*e.a) <= p);
      break;
    case ExprKind::Pow:
      out += "t^";
      out += std::to_string(e.pnum);
      if (e.pden != 1) {
        out += '/';
        out += std::to_string(e.pden);
      }
      break;
    case ExprKind::Call:
      out += e.func == FuncId::Sin ? "sin" : e.func == FuncId::Cos ? "cos" : "exp";
      out += '(';
      print_rec(*e.a, out);
      out += ')';
      break;
  }
}

// Linear form c0 + c1*x1 + c2*x2 + c3*x3, when the expression is such a
// combination of coordinates (t disqualifies it).
struct LinearForm {
  double c[4] = {0, 0, 0, 0}; // const, x1, x2, x3
};

std::optional<LinearForm> linear_form(const ScalarExpr& e) {
  switch (e.kind) {
    case ExprKind::Number: {
      LinearForm f;
      f.c[0] = e.number;
      return f;
    }
    case ExprKind::Var: {
      if (e.var == VarId::T) return std::nullopt;
      LinearForm f;
      f.c[1 + static_cast<int>(e.var)] = 1.0;
      return f;
    }
    case ExprKind::Add:
    case ExprKind::Sub: {
      auto fa = linear_form(*e.a), fb = linear_form(*e.b);
      if (!fa || !fb) return std::nullopt;
      const double s = e.kind == ExprKind::Add ? 1.0 : -1.0;
      for (int i = 0; i < 4; ++i) fa->c[i] += s * fb->c[i];
      return fa;
    }
    case ExprKind::Neg: {
      auto fa = linear_form(*e.a);
      if (!fa) return std::nullopt;
      for (int i = 0; i < 4; ++i) fa->c[i] = -fa->c[i];
      return fa;
    }
    case ExprKind::Mul: {
      // scalar * linear
      const ScalarExpr* num = nullptr;
      const ScalarExpr* other = nullptr;
      if (e.a->kind == ExprKind::Number) num = e.a.get(), other = e.b.get();
      else if (e.b->kind == ExprKind::Number) num = e.b.get(), other = e.a.get();
      if (!num) return std::nullopt;
      auto f = linear_form(*other);
      if (!f) return std::nullopt;
      for (int i = 0; i < 4; ++i) f->c[i] *= num->number;
      return f;
    }
    default: return std::nullopt;
  }
}

} // namespace

ExprPtr expr_number(double v) {
  ScalarExpr e;
  e.kind = ExprKind::Number;
  e.number = v;
  return node(std::move(e));
}
ExprPtr expr_var(VarId v) {
  ScalarExpr e;
  e.kind = ExprKind::Var;
  e.var = v;
  return node(std::move(e));
}
namespace {
ExprPtr binary(ExprKind k, ExprPtr a, ExprPtr b) {
  ScalarExpr e;
  e.kind = k;
  e.a = std::move(a);
  e.b = std::move(b);
  return node(std::move(e));
}
} // namespace
ExprPtr expr_add(ExprPtr a, ExprPtr b) { return binary(ExprKind::Add, std::move(a), std::move(b)); }
ExprPtr expr_sub(ExprPtr a, ExprPtr b) { return binary(ExprKind::Sub, std::move(a), std::move(b)); }
ExprPtr expr_mul(ExprPtr a, ExprPtr b) { return binary(ExprKind::Mul, std::move(a), std::move(b)); }
ExprPtr expr_div(ExprPtr a, ExprPtr b) { return binary(ExprKind::Div, std::move(a), std::move(b)); }
ExprPtr expr_neg(ExprPtr a) {
  if (a->kind == ExprKind::Number) return expr_number(-a->number);
  ScalarExpr e;
  e.kind = ExprKind::Neg;
  e.a = std::move(a);
  return node(std::move(e));
}
ExprPtr expr_pow_t(std::int64_t pnum, std::int64_t pden) {
  if (pden <= 0) throw ArgumentError("power denominator must be positive");
  ScalarExpr e;
  e.kind = ExprKind::Pow;
  e.pnum = pnum;
  e.pden = pden;
  return node(std::move(e));
}
ExprPtr expr_call(FuncId f, ExprPtr a) {
  ScalarExpr e;
  e.kind = ExprKind::Call;
  e.func = f;
  e.a = std::move(a);
  return node(std::move(e));
}

double expr_eval(const ScalarExpr& e, const std::array<double, 3>& coords,
                 double t) {
  switch (e.kind) {
    case ExprKind::Number: return e.number;
    case ExprKind::Var:
      return e.var == VarId::T ? t : coords[static_cast<std::size_t>(e.var)];
    case ExprKind::Add: return expr_eval(*e.a, coords, t) + expr_eval(*e.b, coords, t);
    case ExprKind::Sub: return expr_eval(*e.a, coords, t) - expr_eval(*e.b, coords, t);
    case ExprKind::Mul: return expr_eval(*e.a, coords, t) * expr_eval(*e.b, coords, t);
    case ExprKind::Div: return expr_eval(*e.a, coords, t) / expr_eval(*e.b, coords, t);
    case ExprKind::Neg: return -expr_eval(*e.a, coords, t);
    case ExprKind::Pow:
      return std::pow(t, static_cast<double>(e.pnum) / static_cast<double>(e.pden));
    case ExprKind::Call: {
      const double v = expr_eval(*e.a, coords, t);
      switch (e.func) {
        case FuncId::Sin: return std::sin(v);
        case FuncId::Cos: return std::cos(v);
        case FuncId::Exp: return std::exp(v);
      }
    }
  }
  return 0.0;
}

bool expr_uses_coords(const ScalarExpr& e) {
  return expr_find_var(e, false) != nullptr;
}
bool expr_uses_t(const ScalarExpr& e) { return expr_find_var(e, true) != nullptr; }

const ScalarExpr* expr_find_var(const ScalarExpr& e, bool want_t) {
  switch (e.kind) {
    case ExprKind::Number: return nullptr;
    case ExprKind::Var:
      return (e.var == VarId::T) == want_t ? &e : nullptr;
    case ExprKind::Pow: return want_t ? &e : nullptr;
    case ExprKind::Call:
    case ExprKind::Neg: return expr_find_var(*e.a, want_t);
    default: {
      const ScalarExpr* r = expr_find_var(*e.a, want_t);
      return r ? r : expr_find_var(*e.b, want_t);
    }
  }
}

bool expr_equal(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::Number: return a.number == b.number;
    case ExprKind::Var: return a.var == b.var;
    case ExprKind::Pow: return a.pnum == b.pnum && a.pden == b.pden;
    case ExprKind::Call:
      return a.func == b.func && expr_equal(*a.a, *b.a);
    case ExprKind::Neg: return expr_equal(*a.a, *b.a);
    default: return expr_equal(*a.a, *b.a) && expr_equal(*a.b, *b.b);
  }
}

std::string expr_print(const ScalarExpr& e) {
  std::string out;
  print_rec(e, out);
  return out;
}

double expr_coord_band(const ScalarExpr& e) {
  switch (e.kind) {
    case ExprKind::Number: return 0.0;
    case ExprKind::Var: return e.var == VarId::T ? 0.0 : kInf;
    case ExprKind::Add:
    case ExprKind::Sub:
      return std::max(expr_coord_band(*e.a), expr_coord_band(*e.b));
    case ExprKind::Mul: return expr_coord_band(*e.a) + expr_coord_band(*e.b);
    case ExprKind::Div:
      return expr_coord_band(*e.b) == 0.0 ? expr_coord_band(*e.a) : kInf;
    case ExprKind::Neg: return expr_coord_band(*e.a);
    case ExprKind::Pow: return 0.0;
    case ExprKind::Call: {
      if (!expr_uses_coords(*e.a)) return 0.0;
      if (e.func == FuncId::Exp) return kInf;
      auto lf = linear_form(*e.a);
      if (!lf) return kInf;
      double band = 0.0;
      for (int i = 1; i < 4; ++i) {
        const double c = lf->c[i];
        if (c != std::floor(c)) return kInf;
        band += std::abs(c);
      }
      return band;
    }
  }
  return kInf;
}

namespace detail {

namespace {

double parse_number_token(Cursor& c) {
  c.skip_ws();
  const std::size_t start = c.pos;
  const char* begin = c.src.c_str() + start;
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin)
    throw ExprError("syntax error", start, "number");
  // strtod accepts leading signs; the grammar handles '-' itself
  if (*begin == '+' || *begin == '-')
    throw ExprError("syntax error", start, "number");
  c.pos = start + static_cast<std::size_t>(end - begin);
  return v;
}

std::int64_t parse_int_token(Cursor& c) {
  c.skip_ws();
  const std::size_t start = c.pos;
  bool neg = false;
  if (c.pos < c.src.size() && c.src[c.pos] == '-') {
    neg = true;
    ++c.pos;
  }
  if (c.pos >= c.src.size() || !std::isdigit(static_cast<unsigned char>(c.src[c.pos])))
    throw ExprError("syntax error", start, "integer");
  std::int64_t v = 0;
  while (c.pos < c.src.size() && std::isdigit(static_cast<unsigned char>(c.src[c.pos]))) {
    v = v * 10 + (c.src[c.pos] - '0');
    ++c.pos;
  }
  return neg ? -v : v;
}

ExprPtr with_off(ExprPtr e, std::size_t off) {
  auto m = std::make_shared<ScalarExpr>(*e);
  m->src_off = static_cast<std::ptrdiff_t>(off);
  return m;
}

ExprPtr parse_unary(Cursor& c);

ExprPtr parse_primary(Cursor& c) {
  c.skip_ws();
  const std::size_t off = c.pos;
  const char ch = c.peek();
  if (ch == '(') {
    c.eat('(');
    ExprPtr e = parse_expr_at(c);
    c.expect(')', ")");
    return e;
  }
  if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.')
    return with_off(expr_number(parse_number_token(c)), off);
  if (std::isalpha(static_cast<unsigned char>(ch))) {
    const std::string id = c.ident();
    if (id == "x1") return with_off(expr_var(VarId::X1), off);
    if (id == "x2") return with_off(expr_var(VarId::X2), off);
    if (id == "x3") return with_off(expr_var(VarId::X3), off);
    if (id == "t") return with_off(expr_var(VarId::T), off);
    FuncId f;
    if (id == "sin") f = FuncId::Sin;
    else if (id == "cos") f = FuncId::Cos;
    else if (id == "exp") f = FuncId::Exp;
    else throw ExprError("unknown identifier '" + id + "'", off,
                         "x1|x2|x3|t|sin|cos|exp");
    c.expect('(', "(");
    ExprPtr arg = parse_expr_at(c);
    c.expect(')', ")");
    return with_off(expr_call(f, std::move(arg)), off);
  }
  throw ExprError("syntax error", off, "number|variable|function|(");
}

ExprPtr parse_factor(Cursor& c) {
  const std::size_t off = c.pos;
  ExprPtr e = parse_primary(c);
  while (c.peek() == '^') {
    c.eat('^');
    const std::int64_t pnum = parse_int_token(c);
    std::int64_t pden = 1;
    // a '/' directly followed by an integer belongs to the exponent
    const std::size_t save = c.pos;
    if (c.eat('/')) {
      c.skip_ws();
      if (c.pos < c.src.size() &&
          std::isdigit(static_cast<unsigned char>(c.src[c.pos])))
        pden = parse_int_token(c);
      else
        c.pos = save;
    }
    if (e->kind != ExprKind::Var || e->var != VarId::T)
      throw ExprError("'^' requires base t", off, "t");
    e = with_off(expr_pow_t(pnum, pden), off);
  }
  return e;
}

ExprPtr parse_unary(Cursor& c) {
  DepthGuard guard(c);
  if (c.peek() == '-') {
    const std::size_t off = c.pos;
    c.eat('-');
    return with_off(expr_neg(parse_unary(c)), off);
  }
  return parse_factor(c);
}

ExprPtr parse_term(Cursor& c) {
  ExprPtr e = parse_unary(c);
  for (;;) {
    const char op = c.peek();
    if (op != '*' && op != '/') return e;
    c.eat(op);
    ExprPtr r = parse_unary(c);
    e = op == '*' ? expr_mul(std::move(e), std::move(r))
                  : expr_div(std::move(e), std::move(r));
  }
}

} // namespace

ExprPtr parse_expr_at(Cursor& c) {
  DepthGuard guard(c);
  ExprPtr e = parse_term(c);
  for (;;) {
    const char op = c.peek();
    if (op != '+' && op != '-') return e;
    c.eat(op);
    ExprPtr r = parse_term(c);
    e = op == '+' ? expr_add(std::move(e), std::move(r))
                  : expr_sub(std::move(e), std::move(r));
  }
}

double parse_signed_number_at(Cursor& c) {
  c.skip_ws();
  const bool neg = c.eat('-');
  return (neg ? -1.0 : 1.0) * parse_number_token(c);
}

} // namespace detail

ExprPtr parse_expression(const std::string& src) {
  detail::Cursor c(src);
  ExprPtr e = detail::parse_expr_at(c);
  if (!c.at_end())
    throw ExprError("trailing input", c.pos, "end of input");
  return e;
}

} // namespace lieweyl
