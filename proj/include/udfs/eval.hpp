#pragma once

#include <Eigen/Core>

#include "udfs/dag.hpp"

namespace udfs {

/// Row-wise batch evaluation result. `valid` is false exactly where some node
/// evaluation produced a non-finite value (log/sqrt of a negative, division
/// by zero, overflow).
struct EvalResult {
  Eigen::MatrixXd values;                       // rows = samples, cols = outputs
  Eigen::Array<bool, Eigen::Dynamic, 1> valid;  // per sample
};

struct EvalStats {
  std::size_t node_column_evals = 0;  // one per operator node per batch pass
};

/// Evaluates a frame on a batch of samples. Every operator node is computed
/// exactly once per row; shared subexpressions are never recomputed.
/// Throws std::invalid_argument on dimension mismatch or unlabeled nodes.
EvalResult evaluate_batch(const ExpressionDag& dag, const Eigen::MatrixXd& X,
                          const Eigen::VectorXd& theta,
                          const OperatorSet& ops = OperatorSet::standard(),
                          EvalStats* stats = nullptr);

/// Same, but with per-row parameter values (column k feeds parameter node k).
/// This is what lets a whole parameter grid run as one batch pass.
EvalResult evaluate_batch_paramcols(const ExpressionDag& dag, const Eigen::MatrixXd& X,
                                    const Eigen::MatrixXd& param_cols,
                                    const OperatorSet& ops = OperatorSet::standard(),
                                    EvalStats* stats = nullptr);

}  // namespace udfs
