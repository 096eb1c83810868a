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

#include "qprof/errors.hpp"
#include "qprof/passes.hpp"

namespace qprof {

UndirectedGraph InteractionGraph::graph() const {
  UndirectedGraph g(num_nodes);
  for (const auto& [pair, count] : weights) g.add_edge(pair.first, pair.second);
  return g;
}

InteractionGraph interaction_graph(const Circuit& circuit) {
  InteractionGraph g;
  g.num_nodes = circuit.num_qubits();
  for (const Instruction& op : circuit.instructions()) {
    if (op.qubits.size() != 2 || op.type == GateType::BOX) continue;
    Qubit a = op.qubits[0], b = op.qubits[1];
    if (a > b) std::swap(a, b);
    ++g.weights[{a, b}];
  }
  return g;
}

Layout trivial_layout(const Circuit& circuit, const Target& target) {
  if (circuit.num_qubits() > target.num_qubits()) {
    throw CapacityError("circuit has " + std::to_string(circuit.num_qubits()) +
                        " qubits but target has only " +
                        std::to_string(target.num_qubits()));
  }
  return Layout::identity(circuit.num_qubits(), target.num_qubits());
}

Vf2LayoutResult vf2_layout(const Circuit& circuit, const Target& target,
                           const Vf2Budget& budget) {
  Vf2LayoutResult out;
  if (circuit.num_qubits() > target.num_qubits()) return out;

  const InteractionGraph interactions = interaction_graph(circuit);
  const UndirectedGraph pattern = interactions.graph();
  const std::size_t m = target.num_qubits();
  UndirectedGraph host(m);
  std::vector<double> cost(m * m, 0.0);
  for (const auto& [edge, c] : target.edges()) {
    host.add_edge(edge.first, edge.second);
    cost[edge.first * m + edge.second] = c.error;
    cost[edge.second * m + edge.first] = c.error;
  }
  const Vf2Result r = find_monomorphism(pattern, host, budget, cost);
  out.states_visited = r.states_visited;
  if (r.mapping) {
    std::vector<Qubit> map(r.mapping->begin(), r.mapping->end());
    out.layout = Layout::from_mapping(std::move(map), m);
  }
  return out;
}

}  // namespace qprof
