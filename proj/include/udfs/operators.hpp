#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace udfs {

enum class UnaryOp : std::uint8_t { Neg, Inv, Sin, Cos, Log, Exp, Square, Sqrt };
enum class BinaryOp : std::uint8_t { Add, Sub, Mul, Div };

/// The operator vocabulary used when labeling DAG frames. The list order is
/// part of the contract: it fixes the enumeration order of labelings and thus
/// the reproducibility of every seeded search.
struct OperatorSet {
  std::vector<BinaryOp> binary;
  std::vector<UnaryOp> unary;

  /// +, -, ×, ÷ and neg, inv, sin, cos, log, exp, square, sqrt.
  static const OperatorSet& standard();
};

inline double apply(UnaryOp op, double a) {
  switch (op) {
    case UnaryOp::Neg: return -a;
    case UnaryOp::Inv: return 1.0 / a;
    case UnaryOp::Sin: return std::sin(a);
    case UnaryOp::Cos: return std::cos(a);
    case UnaryOp::Log: return std::log(a);
    case UnaryOp::Exp: return std::exp(a);
    case UnaryOp::Square: return a * a;
    case UnaryOp::Sqrt: return std::sqrt(a);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

inline double apply(BinaryOp op, double a, double b) {
  switch (op) {
    case BinaryOp::Add: return a + b;
    case BinaryOp::Sub: return a - b;
    case BinaryOp::Mul: return a * b;
    case BinaryOp::Div: return a / b;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::string_view name(UnaryOp op);
std::string_view name(BinaryOp op);

}  // namespace udfs
