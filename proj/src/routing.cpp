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

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

#include "qprof/dag.hpp"
#include "qprof/errors.hpp"
#include "qprof/passes.hpp"

namespace qprof {

namespace {

constexpr Qubit kNone = std::numeric_limits<Qubit>::max();

// BFS from `from` to `to`, neighbours in ascending order. Empty when
// unreachable.
std::vector<Qubit> shortest_path(const Target& target, Qubit from, Qubit to) {
  std::vector<Qubit> parent(target.num_qubits(), kNone);
  std::queue<Qubit> todo;
  parent[from] = from;
  todo.push(from);
  while (!todo.empty() && parent[to] == kNone) {
    Qubit q = todo.front();
    todo.pop();
    for (Qubit n : target.neighbours(q)) {
      if (parent[n] == kNone) {
        parent[n] = q;
        todo.push(n);
      }
    }
  }
  if (parent[to] == kNone) return {};
  std::vector<Qubit> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

RoutingResult swap_route(const Circuit& circuit, const Layout& layout,
                         const Target& target) {
  layout.validate();
  if (layout.num_virtual() != circuit.num_qubits() ||
      layout.num_physical() != target.num_qubits()) {
    throw InvalidArgument("layout does not match circuit and target sizes");
  }

  const DagCircuit dag(circuit);
  const std::size_t m = target.num_qubits();
  // `where[p0]`: current position of the state that started on p0.
  // `origin[p]`: which starting position's state is currently on p.
  std::vector<Qubit> where = layout.output_permutation;
  std::vector<Qubit> origin(m);
  for (Qubit p = 0; p < m; ++p) origin[where[p]] = p;
  auto physical = [&](Qubit v) { return where[layout.virtual_to_physical[v]]; };

  RoutingResult result;
  result.circuit = Circuit(m, circuit.name());
  std::vector<Instruction> out;
  out.reserve(circuit.size());

  std::vector<std::size_t> pending(dag.num_nodes());
  std::set<std::size_t> ready;
  for (std::size_t n = 0; n < dag.num_nodes(); ++n) {
    pending[n] = dag.predecessors(n).size();
    if (pending[n] == 0) ready.insert(n);
  }

  auto executable = [&](std::size_t node) {
    const Instruction& op = dag.op(node);
    if (op.qubits.size() == 1) return true;
    if (op.qubits.size() > 2) {
      throw RoutingError("cannot route " + std::to_string(op.qubits.size()) +
                         "-qubit " + std::string(op.name()) +
                         "; expand it first");
    }
    return target.coupled(physical(op.qubits[0]), physical(op.qubits[1]));
  };
  auto emit = [&](std::size_t node) {
    Instruction op = dag.op(node);
    for (Qubit& q : op.qubits) q = physical(q);
    out.push_back(std::move(op));
    for (std::size_t s : dag.successors(node)) {
      if (--pending[s] == 0) ready.insert(s);
    }
  };
  auto do_swap = [&](Qubit a, Qubit b) {
    out.push_back(Instruction::swap(a, b));
    std::swap(origin[a], origin[b]);
    where[origin[a]] = a;
    where[origin[b]] = b;
    ++result.swaps_inserted;
  };

  while (!ready.empty()) {
    bool progressed = true;
    while (progressed) {
      progressed = false;
      for (auto it = ready.begin(); it != ready.end();) {
        if (executable(*it)) {
          const std::size_t node = *it;
          it = ready.erase(it);
          emit(node);
          progressed = true;
        } else {
          ++it;
        }
      }
    }
    if (ready.empty()) break;

    const Instruction& blocked = dag.op(*ready.begin());
    const Qubit from = physical(blocked.qubits[0]);
    const Qubit to = physical(blocked.qubits[1]);
    const std::vector<Qubit> path = shortest_path(target, from, to);
    if (path.empty()) {
      throw RoutingError("physical qubits " + std::to_string(from) + " and " +
                         std::to_string(to) +
                         " are in disconnected parts of the coupling graph");
    }
    for (std::size_t k = 0; k + 2 < path.size(); ++k) {
      do_swap(path[k], path[k + 1]);
    }
  }

  result.circuit.assign(std::move(out));
  result.layout = layout;
  result.layout.output_permutation = where;
  return result;
}

}  // namespace qprof
