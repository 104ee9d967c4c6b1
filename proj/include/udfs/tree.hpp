#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "udfs/dag.hpp"
#include "udfs/operators.hpp"

namespace udfs {

enum class ExprKind : std::uint8_t { Var, Param, Const, Unary, Binary };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree node. Leaves carry a variable index, a parameter
/// index or a numeric constant; internal nodes carry an operator tag.
struct Expr {
  ExprKind kind;
  int index = 0;       // Var / Param
  double value = 0.0;  // Const
  UnaryOp uop = UnaryOp::Neg;
  BinaryOp bop = BinaryOp::Add;
  ExprPtr a, b;
};

ExprPtr var(int index);
ExprPtr param(int index);
ExprPtr constant(double value);
ExprPtr unary(UnaryOp op, ExprPtr a);
ExprPtr binary(BinaryOp op, ExprPtr a, ExprPtr b);

int node_count(const ExprPtr& e);
int operator_count(const ExprPtr& e);
int max_var_index(const ExprPtr& e);   // -1 if none
int max_param_index(const ExprPtr& e); // -1 if none

/// Scalar evaluation; domain violations propagate as NaN/Inf.
double eval(const ExprPtr& e, std::span<const double> xs, std::span<const double> thetas = {});

/// Fully parenthesized rendering: variables as x0.., parameters as c0..,
/// multiplication as ×, division as ÷, squaring as ^2 and inversion as ^-1.
/// parse(render(t)) re-renders to the identical string.
std::string render(const ExprPtr& e);

/// Parses the render() grammar plus the usual conveniences: * and / aliases,
/// pi, and ^p for integer or half-integer p (desugared into square, sqrt, inv
/// and multiplication). Throws std::invalid_argument on malformed input.
ExprPtr parse(std::string_view text);

/// Expands a fully labeled DAG into an expression tree, duplicating shared
/// subexpressions. Throws std::invalid_argument on unlabeled nodes.
ExprPtr expand_to_tree(const ExpressionDag& dag, const OperatorSet& ops = OperatorSet::standard(),
                       int output = 0);

/// Inlines trees in place of variable leaves: each entry of `substitutions`
/// replaces the variable with that index (entries may be null to keep x_i).
ExprPtr substitute_vars(const ExprPtr& e, std::span<const ExprPtr> substitutions);

}  // namespace udfs
