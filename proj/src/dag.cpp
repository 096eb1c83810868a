// Copyright 2026 The qprof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qprof/dag.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace qprof {

DagCircuit::DagCircuit(const Circuit& circuit)
    : num_qubits_(circuit.num_qubits()),
      name_(circuit.name()),
      ops_(circuit.instructions()),
      first_(circuit.num_qubits(), kOutput),
      last_(circuit.num_qubits(), kInput) {
  offset_.reserve(ops_.size() + 1);
  std::size_t total = 0;
  for (const Instruction& op : ops_) {
    offset_.push_back(total);
    total += op.qubits.size();
  }
  offset_.push_back(total);
  pred_.assign(total, kInput);
  succ_.assign(total, kOutput);

  // Slot of the last node on each wire, so the successor link can be patched.
  std::vector<std::size_t> last_slot(num_qubits_, 0);
  for (NodeId node = 0; node < ops_.size(); ++node) {
    const auto& qubits = ops_[node].qubits;
    for (std::size_t k = 0; k < qubits.size(); ++k) {
      const Qubit q = qubits[k];
      const std::size_t slot = offset_[node] + k;
      if (last_[q] == kInput) {
        first_[q] = node;
      } else {
        pred_[slot] = last_[q];
        succ_[last_slot[q]] = node;
      }
      last_[q] = node;
      last_slot[q] = slot;
    }
  }
}

std::vector<DagCircuit::NodeId> DagCircuit::predecessors(NodeId node) const {
  std::vector<NodeId> out;
  for (std::size_t s = offset_[node]; s < offset_[node + 1]; ++s) {
    if (pred_[s] != kInput &&
        std::find(out.begin(), out.end(), pred_[s]) == out.end()) {
      out.push_back(pred_[s]);
    }
  }
  return out;
}

std::vector<DagCircuit::NodeId> DagCircuit::successors(NodeId node) const {
  std::vector<NodeId> out;
  for (std::size_t s = offset_[node]; s < offset_[node + 1]; ++s) {
    if (succ_[s] != kOutput &&
        std::find(out.begin(), out.end(), succ_[s]) == out.end()) {
      out.push_back(succ_[s]);
    }
  }
  return out;
}

bool DagCircuit::has_edge(NodeId from, NodeId to) const {
  for (std::size_t s = offset_[from]; s < offset_[from + 1]; ++s) {
    if (succ_[s] == to) return true;
  }
  return false;
}

std::vector<DagCircuit::NodeId> DagCircuit::topological_order() const {
  std::vector<std::size_t> indegree(ops_.size(), 0);
  for (NodeId n = 0; n < ops_.size(); ++n) indegree[n] = predecessors(n).size();
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (NodeId n = 0; n < ops_.size(); ++n) {
    if (indegree[n] == 0) ready.push(n);
  }
  std::vector<NodeId> order;
  order.reserve(ops_.size());
  while (!ready.empty()) {
    NodeId n = ready.top();
    ready.pop();
    order.push_back(n);
    for (NodeId s : successors(n)) {
      if (--indegree[s] == 0) ready.push(s);
    }
  }
  return order;
}

std::vector<DagCircuit::NodeId> DagCircuit::wire(Qubit q) const {
  std::vector<NodeId> out;
  NodeId node = first_[q];
  while (node != kOutput) {
    out.push_back(node);
    const auto& qubits = ops_[node].qubits;
    const std::size_t k = static_cast<std::size_t>(
        std::find(qubits.begin(), qubits.end(), q) - qubits.begin());
    node = succ_[offset_[node] + k];
  }
  return out;
}

DagCircuit to_dag(const Circuit& circuit) { return DagCircuit(circuit); }

Circuit from_dag(const DagCircuit& dag) {
  Circuit out(dag.num_qubits(), dag.name());
  std::vector<Instruction> ops;
  ops.reserve(dag.num_nodes());
  for (auto node : dag.topological_order()) ops.push_back(dag.op(node));
  out.assign(std::move(ops));
  return out;
}

}  // namespace qprof
