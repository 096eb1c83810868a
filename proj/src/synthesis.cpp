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

#include <numbers>

#include "qprof/errors.hpp"
#include "qprof/passes.hpp"

namespace qprof {

namespace {

constexpr double kPi = std::numbers::pi;
// Deeper rule chains than this are treated as cycles.
constexpr int kMaxRuleDepth = 8;

// One level of box expansion. Returns false if `op` is not a box.
bool expand_box(const Instruction& op, Circuit& out) {
  if (op.type != GateType::BOX) return false;
  if (op.label == "qft") {
    append_qft_body(out, op.qubits);
  } else if (op.label == "ghz") {
    out.append(Instruction::h(op.qubits[0]));
    for (std::size_t i = 0; i + 1 < op.qubits.size(); ++i) {
      out.append(Instruction::cx(op.qubits[i], op.qubits[i + 1]));
    }
  } else {
    throw UnsupportedOperation("no synthesis for BOX '" + op.label + "'");
  }
  return true;
}

// Single-step rewrite rules; empty when no rule exists.
std::vector<Instruction> rewrite_rule(const Instruction& op) {
  const auto& q = op.qubits;
  switch (op.type) {
    case GateType::H:
      return {Instruction::rz(kPi / 2, q[0]), Instruction::sx(q[0]),
              Instruction::rz(kPi / 2, q[0])};
    case GateType::X:
      return {Instruction::sx(q[0]), Instruction::sx(q[0])};
    case GateType::SX:
      return {Instruction::h(q[0]), Instruction::rz(kPi / 2, q[0]),
              Instruction::h(q[0])};
    case GateType::SWAP:
      return {Instruction::cx(q[0], q[1]), Instruction::cx(q[1], q[0]),
              Instruction::cx(q[0], q[1])};
    case GateType::CP:
      return {Instruction::rz(op.angle / 2, q[0]), Instruction::cx(q[0], q[1]),
              Instruction::rz(-op.angle / 2, q[1]),
              Instruction::cx(q[0], q[1]),
              Instruction::rz(op.angle / 2, q[1])};
    default:
      return {};
  }
}

void translate_into(const Instruction& op, const Target& target,
                    std::vector<Instruction>& out, int depth) {
  if (op.type == GateType::DELAY || target.in_basis(op.name())) {
    out.push_back(op);
    return;
  }
  if (op.type == GateType::BOX) {
    throw TranslationError("BOX '" + op.label +
                           "' must be synthesized before translation");
  }
  std::vector<Instruction> rule = rewrite_rule(op);
  if (rule.empty() || depth >= kMaxRuleDepth) {
    throw TranslationError("no rule chain from " + std::string(op.name()) +
                           " into the target basis");
  }
  for (const Instruction& r : rule) translate_into(r, target, out, depth + 1);
}

}  // namespace

Circuit high_level_synthesis(const Circuit& circuit) {
  Circuit current = circuit;
  bool expanded = true;
  while (expanded) {
    expanded = false;
    Circuit next(current.num_qubits(), current.name());
    for (const Instruction& op : current.instructions()) {
      if (expand_box(op, next)) {
        expanded = true;
      } else {
        next.append(op);
      }
    }
    if (expanded) current = std::move(next);
  }
  return current;
}

Circuit basis_translate(const Circuit& circuit, const Target& target) {
  std::vector<Instruction> out;
  out.reserve(circuit.size() * 3);
  for (const Instruction& op : circuit.instructions()) {
    translate_into(op, target, out, 0);
  }
  Circuit result(circuit.num_qubits(), circuit.name());
  result.assign(std::move(out));
  return result;
}

}  // namespace qprof
