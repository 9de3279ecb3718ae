#ifndef LIEWEYL_ERRORS_HPP
#define LIEWEYL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieweyl {

/// Base class of everything thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An irrep label was paired with the wrong group.
class LabelGroupMismatch : public Error {
public:
  explicit LabelGroupMismatch(const std::string& msg) : Error(msg) {}
};

/// A quadrature rule was too coarse for the requested operation.
class QuadratureBandError : public Error {
public:
  explicit QuadratureBandError(const std::string& msg) : Error(msg) {}
};

/// Invalid argument value (negative order, empty grid, ...).
class ArgumentError : public Error {
public:
  explicit ArgumentError(const std::string& msg) : Error(msg) {}
};

/// Requested operation is not defined for the given group/spec.
class UnsupportedError : public Error {
public:
  explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

/// Expression parse or type failure. `offset` is a byte offset into the
/// source text; `expected` lists the token classes that would have been
/// accepted at that point.
class ExprError : public Error {
public:
  ExprError(const std::string& msg, std::size_t offset,
            std::string expected = {})
      : Error(msg + " at offset " + std::to_string(offset) +
              (expected.empty() ? "" : " (expected " + expected + ")")),
        offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

private:
  std::size_t offset_;
  std::string expected_;
};

/// Symbol expression evaluated to a non-finite value; carries the
/// (node, irrep) location that triggered it.
class EvalError : public Error {
public:
  EvalError(const std::string& msg, std::ptrdiff_t node, const std::string& irrep)
      : Error(msg + " [node " + std::to_string(node) + ", irrep " + irrep + "]"),
        node_(node), irrep_(irrep) {}

  std::ptrdiff_t node() const { return node_; }
  const std::string& irrep() const { return irrep_; }

private:
  std::ptrdiff_t node_;
  std::string irrep_;
};

/// Positivity precondition Tr sigma >= 0 violated; identifies the witness.
class PositivityError : public Error {
public:
  PositivityError(const std::string& msg, std::ptrdiff_t node,
                  const std::string& irrep, double value)
      : Error(msg + " [node " + std::to_string(node) + ", irrep " + irrep +
              ", trace " + std::to_string(value) + "]"),
        node_(node), irrep_(irrep), value_(value) {}

  std::ptrdiff_t node() const { return node_; }
  const std::string& irrep() const { return irrep_; }
  double value() const { return value_; }

private:
  std::ptrdiff_t node_;
  std::string irrep_;
  double value_;
};

} // namespace lieweyl

#endif
