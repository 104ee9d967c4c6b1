#include "udfs/dag.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace udfs {

bool ExpressionDag::is_frame() const {
  for (const auto& n : inner)
    if (n.label == kUnlabeled) return false;
  for (const auto& n : outputs)
    if (n.label == kUnlabeled) return false;
  return true;
}

bool ExpressionDag::is_skeleton() const {
  for (const auto& n : inner)
    if (n.label != kUnlabeled) return false;
  for (const auto& n : outputs)
    if (n.label != kUnlabeled) return false;
  return true;
}

namespace {

void validate_node(const DagNode& n, int max_pred, const OperatorSet& ops) {
  if (n.arity != 1 && n.arity != 2) throw std::invalid_argument("dag: node arity must be 1 or 2");
  for (int i = 0; i < n.arity; ++i) {
    if (n.preds[i] < 0 || n.preds[i] >= max_pred)
      throw std::invalid_argument("dag: predecessor index out of range");
  }
  if (n.label != kUnlabeled) {
    const int n_labels = n.arity == 1 ? int(ops.unary.size()) : int(ops.binary.size());
    if (n.label < 0 || n.label >= n_labels)
      throw std::invalid_argument("dag: operator label out of range");
  }
}

}  // namespace

void validate(const ExpressionDag& dag, const OperatorSet& ops) {
  if (dag.n_vars < 0 || dag.n_params < 0)
    throw std::invalid_argument("dag: negative input counts");
  if (dag.n_inputs() < 1) throw std::invalid_argument("dag: at least one input node required");
  if (dag.outputs.empty()) throw std::invalid_argument("dag: at least one output node required");
  for (std::size_t k = 0; k < dag.inner.size(); ++k)
    validate_node(dag.inner[k], dag.n_inputs() + int(k), ops);
  const int non_output = dag.n_inputs() + int(dag.inner.size());
  for (const auto& n : dag.outputs) validate_node(n, non_output, ops);
}

int dag_complexity(const ExpressionDag& dag) {
  return dag.n_inputs() + dag.n_operator_nodes();
}

bool is_pruned(const ExpressionDag& dag) {
  std::vector<bool> has_succ(dag.inner.size(), false);
  auto mark = [&](const DagNode& n) {
    for (int i = 0; i < n.arity; ++i) {
      const int p = n.preds[i] - dag.n_inputs();
      if (p >= 0) has_succ[p] = true;
    }
  };
  for (const auto& n : dag.inner) mark(n);
  for (const auto& n : dag.outputs) mark(n);
  for (bool b : has_succ)
    if (!b) return false;
  return true;
}

ExpressionDag pruned(const ExpressionDag& dag) {
  // Mark intermediaries reachable (backwards) from the outputs. Because the
  // node list is topological, one reverse sweep suffices for the recursion.
  std::vector<bool> live(dag.inner.size(), false);
  auto mark_preds = [&](const DagNode& n) {
    for (int i = 0; i < n.arity; ++i) {
      const int p = n.preds[i] - dag.n_inputs();
      if (p >= 0) live[p] = true;
    }
  };
  for (const auto& n : dag.outputs) mark_preds(n);
  for (int k = int(dag.inner.size()) - 1; k >= 0; --k)
    if (live[k]) mark_preds(dag.inner[k]);

  ExpressionDag out;
  out.n_vars = dag.n_vars;
  out.n_params = dag.n_params;
  std::vector<int> remap(dag.inner.size(), -1);
  for (std::size_t k = 0; k < dag.inner.size(); ++k) {
    if (!live[k]) continue;
    DagNode n = dag.inner[k];
    for (int i = 0; i < n.arity; ++i) {
      const int p = n.preds[i] - dag.n_inputs();
      if (p >= 0) n.preds[i] = dag.n_inputs() + remap[p];
    }
    remap[k] = int(out.inner.size());
    out.inner.push_back(n);
  }
  out.outputs = dag.outputs;
  for (auto& n : out.outputs) {
    for (int i = 0; i < n.arity; ++i) {
      const int p = n.preds[i] - dag.n_inputs();
      if (p >= 0) n.preds[i] = dag.n_inputs() + remap[p];
    }
  }
  return out;
}

std::string structure_key(const ExpressionDag& dag) {
  std::string key;
  key.reserve(8 + 8 * (dag.inner.size() + dag.outputs.size()));
  auto put = [&key](int v) {
    key.push_back(char(v & 0xff));
    key.push_back(char((v >> 8) & 0xff));
  };
  put(dag.n_vars);
  put(dag.n_params);
  put(int(dag.inner.size()));
  auto put_node = [&](const DagNode& n) {
    put(n.arity);
    put(n.preds[0]);
    put(n.arity == 2 ? n.preds[1] : -1);
    put(n.label);
  };
  for (const auto& n : dag.inner) put_node(n);
  for (const auto& n : dag.outputs) put_node(n);
  return key;
}

std::vector<bool> input_usage(const ExpressionDag& dag) {
  std::vector<bool> used(dag.n_inputs(), false);
  std::vector<bool> live(dag.inner.size(), false);
  auto mark = [&](const DagNode& n) {
    for (int i = 0; i < n.arity; ++i) {
      const int p = n.preds[i];
      if (p < dag.n_inputs())
        used[p] = true;
      else
        live[p - dag.n_inputs()] = true;
    }
  };
  for (const auto& n : dag.outputs) mark(n);
  for (int k = int(dag.inner.size()) - 1; k >= 0; --k)
    if (live[k]) mark(dag.inner[k]);
  return used;
}

void to_json(nlohmann::ordered_json& j, const ExpressionDag& dag) {
  auto node_json = [](const DagNode& n) {
    nlohmann::ordered_json nj;
    nj["arity"] = n.arity;
    nj["preds"] = n.arity == 2 ? std::vector<int>{n.preds[0], n.preds[1]}
                               : std::vector<int>{n.preds[0]};
    if (n.label != kUnlabeled) nj["label"] = n.label;
    return nj;
  };
  j = nlohmann::ordered_json::object();
  j["n_vars"] = dag.n_vars;
  j["n_params"] = dag.n_params;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : dag.inner) j["nodes"].push_back(node_json(n));
  j["outputs"] = nlohmann::ordered_json::array();
  for (const auto& n : dag.outputs) j["outputs"].push_back(node_json(n));
}

ExpressionDag dag_from_json(const nlohmann::ordered_json& j) {
  auto node_from = [](const nlohmann::ordered_json& nj) {
    DagNode n;
    n.arity = nj.at("arity").get<int>();
    const auto& preds = nj.at("preds");
    if (int(preds.size()) != n.arity)
      throw std::invalid_argument("dag json: preds length does not match arity");
    n.preds[0] = preds[0].get<int>();
    if (n.arity == 2) n.preds[1] = preds[1].get<int>();
    n.label = nj.contains("label") ? nj["label"].get<int>() : kUnlabeled;
    return n;
  };
  ExpressionDag dag;
  dag.n_vars = j.at("n_vars").get<int>();
  dag.n_params = j.at("n_params").get<int>();
  for (const auto& nj : j.at("nodes")) dag.inner.push_back(node_from(nj));
  for (const auto& nj : j.at("outputs")) dag.outputs.push_back(node_from(nj));
  validate(dag);
  return dag;
}

}  // namespace udfs
