#include "udfs/operators.hpp"

namespace udfs {

const OperatorSet& OperatorSet::standard() {
  static const OperatorSet set{
      {BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul, BinaryOp::Div},
      {UnaryOp::Neg, UnaryOp::Inv, UnaryOp::Sin, UnaryOp::Cos, UnaryOp::Log, UnaryOp::Exp,
       UnaryOp::Square, UnaryOp::Sqrt},
  };
  return set;
}

std::string_view name(UnaryOp op) {
  switch (op) {
    case UnaryOp::Neg: return "neg";
    case UnaryOp::Inv: return "inv";
    case UnaryOp::Sin: return "sin";
    case UnaryOp::Cos: return "cos";
    case UnaryOp::Log: return "log";
    case UnaryOp::Exp: return "exp";
    case UnaryOp::Square: return "square";
    case UnaryOp::Sqrt: return "sqrt";
  }
  return "?";
}

std::string_view name(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "add";
    case BinaryOp::Sub: return "sub";
    case BinaryOp::Mul: return "mul";
    case BinaryOp::Div: return "div";
  }
  return "?";
}

}  // namespace udfs
