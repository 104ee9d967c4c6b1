#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "udfs/operators.hpp"

namespace udfs {

inline constexpr int kUnlabeled = -1;

/// One operator node of an expression DAG. `label` indexes into the
/// OperatorSet list matching the node's arity; kUnlabeled marks a skeleton
/// node.
struct DagNode {
  int arity = 1;
  std::array<int, 2> preds{0, 0};
  int label = kUnlabeled;

  friend bool operator==(const DagNode&, const DagNode&) = default;
};

/// Expression DAG over variable/parameter input nodes, intermediary operator
/// nodes and output operator nodes.
///
/// Node ids referenced by `preds`: 0..n_vars-1 are variables, then
/// n_vars..n_vars+n_params-1 are parameters, then n_inputs()+k is intermediary
/// k. Output nodes are not addressable, so they can never have successors.
/// Intermediary k may only reference inputs and intermediaries < k, which
/// makes the node list a topological order by construction.
struct ExpressionDag {
  int n_vars = 0;
  int n_params = 0;
  std::vector<DagNode> inner;
  std::vector<DagNode> outputs;

  int n_inputs() const { return n_vars + n_params; }
  int n_operator_nodes() const { return int(inner.size() + outputs.size()); }

  bool is_frame() const;     // every operator node labeled
  bool is_skeleton() const;  // no operator node labeled

  friend bool operator==(const ExpressionDag&, const ExpressionDag&) = default;
};

/// Throws std::invalid_argument if the structural invariants are violated
/// (bad predecessor ranges, non-topological references, out-of-range labels).
void validate(const ExpressionDag& dag, const OperatorSet& ops = OperatorSet::standard());

/// Total node count: inputs + intermediaries + outputs.
int dag_complexity(const ExpressionDag& dag);

/// Recursively removes intermediary nodes without successors and compacts the
/// numbering. Idempotent.
ExpressionDag pruned(const ExpressionDag& dag);

/// True if every intermediary node has at least one successor.
bool is_pruned(const ExpressionDag& dag);

/// Byte string identifying the structure (and labels, when present); used to
/// deduplicate sampled skeletons.
std::string structure_key(const ExpressionDag& dag);

/// For each input node, whether any output depends on it.
std::vector<bool> input_usage(const ExpressionDag& dag);

void to_json(nlohmann::ordered_json& j, const ExpressionDag& dag);
ExpressionDag dag_from_json(const nlohmann::ordered_json& j);

}  // namespace udfs
