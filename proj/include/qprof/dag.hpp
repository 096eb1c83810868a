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

#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "qprof/circuit.hpp"

namespace qprof {

/// Dependency-graph form of a circuit.
///
/// Node i is instruction i of the source circuit. For the k-th qubit of a
/// node, `predecessor(i, k)` is the previous node on that wire (or
/// `kInput`), and `successor(i, k)` the next one (or `kOutput`). Edges are
/// exactly these per-wire happens-before links.
class DagCircuit {
 public:
  using NodeId = std::size_t;
  static constexpr NodeId kInput = std::numeric_limits<NodeId>::max();
  static constexpr NodeId kOutput = std::numeric_limits<NodeId>::max() - 1;

  DagCircuit() = default;
  explicit DagCircuit(const Circuit& circuit);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t num_nodes() const { return ops_.size(); }
  const std::string& name() const { return name_; }
  const Instruction& op(NodeId node) const { return ops_[node]; }

  NodeId predecessor(NodeId node, std::size_t slot) const {
    return pred_[offset_[node] + slot];
  }
  NodeId successor(NodeId node, std::size_t slot) const {
    return succ_[offset_[node] + slot];
  }
  /// First / last node on a wire, or kOutput / kInput when the wire is idle.
  NodeId first_on_wire(Qubit q) const { return first_[q]; }
  NodeId last_on_wire(Qubit q) const { return last_[q]; }

  /// Distinct predecessor nodes (boundaries excluded).
  std::vector<NodeId> predecessors(NodeId node) const;
  std::vector<NodeId> successors(NodeId node) const;
  bool has_edge(NodeId from, NodeId to) const;

  /// Kahn's algorithm, lowest node id first among ready nodes.
  std::vector<NodeId> topological_order() const;

  /// Node ids on one wire in order.
  std::vector<NodeId> wire(Qubit q) const;

 private:
  std::size_t num_qubits_ = 0;
  std::string name_;
  std::vector<Instruction> ops_;
  std::vector<std::size_t> offset_;
  std::vector<NodeId> pred_;
  std::vector<NodeId> succ_;
  std::vector<NodeId> first_;
  std::vector<NodeId> last_;
};

DagCircuit to_dag(const Circuit& circuit);
Circuit from_dag(const DagCircuit& dag);

}  // namespace qprof
