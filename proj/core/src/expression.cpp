#include "crnreduce/expression.hpp"

#include "crnreduce/error.hpp"

namespace crnreduce {

struct Expression::Node {
  Op op;
  Rational value;
  Symbol sym;
  unsigned exponent = 0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

Expression Expression::constant(const Rational& value) {
  auto n = std::make_shared<Node>();
  n->op = Op::constant;
  n->value = value;
  return Expression(std::move(n));
}

Expression Expression::symbol(const Symbol& s) {
  auto n = std::make_shared<Node>();
  n->op = Op::symbol;
  n->sym = s;
  return Expression(std::move(n));
}

Expression Expression::binary(Op op, Expression lhs, Expression rhs) {
  if (op != Op::add && op != Op::sub && op != Op::mul && op != Op::div) {
    throw Error(ErrorCode::invalid_argument, "not a binary operator");
  }
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(lhs.node_);
  n->rhs = std::move(rhs.node_);
  return Expression(std::move(n));
}

Expression Expression::negate(Expression operand) {
  auto n = std::make_shared<Node>();
  n->op = Op::neg;
  n->lhs = std::move(operand.node_);
  return Expression(std::move(n));
}

Expression Expression::power(Expression base, unsigned exponent) {
  auto n = std::make_shared<Node>();
  n->op = Op::pow;
  n->exponent = exponent;
  n->lhs = std::move(base.node_);
  return Expression(std::move(n));
}

Expression::Op Expression::op() const noexcept { return node_->op; }

RationalFunction Expression::expand() const {
  const Node& n = *node_;
  switch (n.op) {
    case Op::constant: return RationalFunction(n.value);
    case Op::symbol: return RationalFunction(n.sym);
    case Op::neg: return -Expression(n.lhs).expand();
    case Op::add: return Expression(n.lhs).expand() + Expression(n.rhs).expand();
    case Op::sub: return Expression(n.lhs).expand() - Expression(n.rhs).expand();
    case Op::mul: return Expression(n.lhs).expand() * Expression(n.rhs).expand();
    case Op::div: return Expression(n.lhs).expand() / Expression(n.rhs).expand();
    case Op::pow: {
      RationalFunction base = Expression(n.lhs).expand();
      return RationalFunction(base.num().pow(n.exponent), base.den().pow(n.exponent));
    }
  }
  throw Error(ErrorCode::invalid_argument, "corrupt expression node");
}

std::string Expression::to_string() const {
  const Node& n = *node_;
  switch (n.op) {
    case Op::constant: return crnreduce::to_string(n.value);
    case Op::symbol: return n.sym.to_string();
    case Op::neg: return "(-" + Expression(n.lhs).to_string() + ")";
    case Op::pow:
      return "(" + Expression(n.lhs).to_string() + ")^" + std::to_string(n.exponent);
    case Op::add:
    case Op::sub:
    case Op::mul:
    case Op::div: {
      const char* sign = n.op == Op::add ? " + " : n.op == Op::sub ? " - " : n.op == Op::mul ? "*" : "/";
      return "(" + Expression(n.lhs).to_string() + sign + Expression(n.rhs).to_string() + ")";
    }
  }
  return "?";
}

RationalFunction substitute(const Expression& target, const Binding& binding) {
  return substitute(target.expand(), binding);
}

}  // namespace crnreduce
