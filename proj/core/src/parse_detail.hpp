#ifndef LIEWEYL_PARSE_DETAIL_HPP
#define LIEWEYL_PARSE_DETAIL_HPP

#include <cctype>
#include <cstdint>
#include <string>

#include "lieweyl/errors.hpp"
#include "lieweyl/expr.hpp"

namespace lieweyl::detail {

// Shared scanning state for the expression and operator grammars.
struct Cursor {
  const std::string& src;
  std::size_t pos = 0;
  int depth = 0;

  explicit Cursor(const std::string& s) : src(s) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const std::string& expected) {
    if (!eat(c)) throw ExprError("syntax error", pos, expected);
  }
  // Identifier: [A-Za-z][A-Za-z0-9]*
  std::string ident() {
    skip_ws();
    std::size_t s = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos]))))
      ++pos;
    return src.substr(s, pos - s);
  }
  std::string peek_ident() {
    skip_ws();
    std::size_t p = pos;
    std::string id = ident();
    pos = p;
    return id;
  }
};

// Bounds recursion so adversarial nesting yields a diagnostic, not a
// stack overflow.
struct DepthGuard {
  Cursor& c;
  explicit DepthGuard(Cursor& cur) : c(cur) {
    if (++c.depth > 200)
      throw ExprError("nesting too deep", c.pos, "shallower expression");
  }
  ~DepthGuard() { --c.depth; }
};

ExprPtr parse_expr_at(Cursor& c);
double parse_signed_number_at(Cursor& c);

} // namespace lieweyl::detail

#endif
