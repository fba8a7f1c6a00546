#pragma once

#include <memory>
#include <string>

#include "crnreduce/rational_function.hpp"

namespace crnreduce {

/// Immutable rate-expression tree as written in network files. Division is
/// allowed so that rational rates produced by a reduction can be read back.
class Expression {
 public:
  enum class Op { constant, symbol, add, sub, mul, div, neg, pow };

  static Expression constant(const Rational& value);
  static Expression symbol(const Symbol& s);
  static Expression binary(Op op, Expression lhs, Expression rhs);
  static Expression negate(Expression operand);
  static Expression power(Expression base, unsigned exponent);

  Op op() const noexcept;

  /// Expands to a normalized rational function. Throws
  /// Error(division_by_zero) when a divisor expands to zero.
  RationalFunction expand() const;

  /// Fully parenthesized rendering.
  std::string to_string() const;

 private:
  struct Node;
  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

RationalFunction substitute(const Expression& target, const Binding& binding);

}  // namespace crnreduce
