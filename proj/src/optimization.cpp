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

#include <cmath>

#include "qprof/gate_matrix.hpp"
#include "qprof/passes.hpp"

namespace qprof {

namespace {

constexpr double kAngleTol = 1e-12;

bool cancels(const Instruction& a, const Instruction& b) {
  if (a.type != b.type) return false;
  switch (a.type) {
    case GateType::H:
    case GateType::X:
    case GateType::CX:
      return a.qubits == b.qubits;
    case GateType::SWAP:
      return a.qubits == b.qubits ||
             (a.qubits[0] == b.qubits[1] && a.qubits[1] == b.qubits[0]);
    case GateType::RZ:
      return a.qubits == b.qubits &&
             std::abs(normalize_angle(a.angle + b.angle)) < kAngleTol;
    default:
      return false;
  }
}

bool is_resynthesizable(const Instruction& op) {
  return op.type == GateType::H || op.type == GateType::X ||
         op.type == GateType::SX || op.type == GateType::RZ;
}

}  // namespace

Circuit inverse_cancellation(const Circuit& circuit) {
  const auto& ops = circuit.instructions();
  // Per-wire stacks of surviving instruction indices. An instruction cancels
  // with the one on top of all of its wires' stacks, which is exactly its
  // DAG predecessor on every wire; popping it re-exposes the one before, so
  // nested pairs cancel in the same sweep.
  std::vector<std::vector<std::size_t>> stacks(circuit.num_qubits());
  std::vector<bool> dead(ops.size(), false);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const Instruction& op = ops[i];
    auto& first = stacks[op.qubits[0]];
    if (!first.empty()) {
      const std::size_t j = first.back();
      bool adjacent = ops[j].qubits.size() == op.qubits.size();
      for (Qubit q : op.qubits) {
        adjacent = adjacent && !stacks[q].empty() && stacks[q].back() == j;
      }
      if (adjacent && cancels(ops[j], op)) {
        dead[i] = dead[j] = true;
        for (Qubit q : ops[j].qubits) stacks[q].pop_back();
        continue;
      }
    }
    for (Qubit q : op.qubits) stacks[q].push_back(i);
  }
  std::vector<Instruction> out;
  out.reserve(ops.size());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (!dead[i]) out.push_back(ops[i]);
  }
  Circuit result(circuit.num_qubits(), circuit.name());
  result.assign(std::move(out));
  return result;
}

Circuit optimize_1q_gates(const Circuit& circuit) {
  const auto& ops = circuit.instructions();
  std::vector<bool> dead(ops.size(), false);
  // Replacement gates are emitted at the position of a run's last gate.
  std::vector<std::vector<Instruction>> inserted(ops.size());
  std::vector<std::vector<std::size_t>> runs(circuit.num_qubits());

  auto flush = [&](Qubit q) {
    std::vector<std::size_t>& run = runs[q];
    if (run.size() >= 2) {
      Mat2 product = identity2();
      bool non_native = false;
      bool all_rz = true;
      for (std::size_t idx : run) {
        product = *one_qubit_matrix(ops[idx]) * product;
        non_native = non_native || ops[idx].type == GateType::H;
        all_rz = all_rz && ops[idx].type == GateType::RZ;
      }
      std::vector<Instruction> synth;
      if (all_rz) {
        double total = 0.0;
        for (std::size_t idx : run) total += ops[idx].angle;
        if (std::abs(normalize_angle(total)) >= kAngleTol) {
          synth.push_back(Instruction::rz(normalize_angle(total), q));
        }
      } else {
        synth = synthesize_zsx(product, q);
      }
      if (synth.size() < run.size() ||
          (synth.size() == run.size() && non_native)) {
        for (std::size_t idx : run) dead[idx] = true;
        inserted[run.back()] = std::move(synth);
      }
    }
    run.clear();
  };

  for (std::size_t i = 0; i < ops.size(); ++i) {
    const Instruction& op = ops[i];
    if (op.qubits.size() == 1 && is_resynthesizable(op)) {
      runs[op.qubits[0]].push_back(i);
    } else {
      for (Qubit q : op.qubits) flush(q);
    }
  }
  for (Qubit q = 0; q < circuit.num_qubits(); ++q) flush(q);

  std::vector<Instruction> out;
  out.reserve(ops.size());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (!dead[i]) out.push_back(ops[i]);
    for (Instruction& r : inserted[i]) out.push_back(std::move(r));
  }
  Circuit result(circuit.num_qubits(), circuit.name());
  result.assign(std::move(out));
  return result;
}

}  // namespace qprof
