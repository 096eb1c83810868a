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

#include "qprof/circuit.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>

#include "qprof/errors.hpp"

namespace qprof {

namespace {

constexpr std::array<std::string_view, 9> kGateNames = {
    "H", "X", "SX", "RZ", "CP", "CX", "SWAP", "DELAY", "BOX"};

// FNV-1a, fed word by word.
class Fnv {
 public:
  void add(std::uint64_t word) {
    for (int i = 0; i < 8; ++i) {
      state_ ^= (word >> (8 * i)) & 0xffu;
      state_ *= 0x100000001b3ULL;
    }
  }
  std::uint64_t value() const { return state_; }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace

std::string_view gate_name(GateType type) {
  return kGateNames[static_cast<std::size_t>(type)];
}

std::optional<GateType> gate_type_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kGateNames.size(); ++i) {
    if (kGateNames[i] == name) return static_cast<GateType>(i);
  }
  return std::nullopt;
}

std::optional<std::size_t> fixed_arity(GateType type) {
  switch (type) {
    case GateType::H:
    case GateType::X:
    case GateType::SX:
    case GateType::RZ:
    case GateType::DELAY:
      return 1;
    case GateType::CP:
    case GateType::CX:
    case GateType::SWAP:
      return 2;
    case GateType::BOX:
      return std::nullopt;
  }
  return std::nullopt;
}

bool is_two_qubit(GateType type) {
  return type == GateType::CP || type == GateType::CX ||
         type == GateType::SWAP;
}

void Instruction::validate() const {
  if (auto arity = fixed_arity(type)) {
    if (qubits.size() != *arity) {
      throw InvariantViolation(
          "qubits", std::string(name()) + " expects " +
                        std::to_string(*arity) + " qubit(s), got " +
                        std::to_string(qubits.size()));
    }
  } else if (qubits.empty()) {
    throw InvariantViolation("qubits", "BOX arity must be at least 1");
  }
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    for (std::size_t j = i + 1; j < qubits.size(); ++j) {
      if (qubits[i] == qubits[j]) {
        throw InvariantViolation(
            "qubits", "repeated qubit q" + std::to_string(qubits[i]) +
                          " in " + std::string(name()));
      }
    }
  }
  if (!std::isfinite(angle)) {
    throw InvariantViolation("angle", "angle must be finite");
  }
  if (type == GateType::DELAY && ticks < 0) {
    throw InvariantViolation("ticks", "delay must be non-negative");
  }
  if (type == GateType::BOX && label.empty()) {
    throw InvariantViolation("label", "BOX needs a name");
  }
}

Circuit::Circuit(std::size_t num_qubits, std::string name)
    : num_qubits_(num_qubits), name_(std::move(name)) {}

void Circuit::check(const Instruction& op) const {
  op.validate();
  for (Qubit q : op.qubits) {
    if (q >= num_qubits_) {
      throw InvariantViolation(
          "qubits", "q" + std::to_string(q) + " out of range for " +
                        std::to_string(num_qubits_) + "-qubit circuit");
    }
  }
}

Circuit& Circuit::append(Instruction op) {
  check(op);
  ops_.push_back(std::move(op));
  return *this;
}

Circuit& Circuit::append(std::initializer_list<Instruction> ops) {
  for (const Instruction& op : ops) append(op);
  return *this;
}

void Circuit::assign(std::vector<Instruction> ops) {
  for (const Instruction& op : ops) check(op);
  ops_ = std::move(ops);
}

CircuitMetrics Circuit::metrics() const {
  CircuitMetrics m;
  m.size = ops_.size();
  std::vector<std::size_t> wire_depth(num_qubits_, 0);
  for (const Instruction& op : ops_) {
    std::size_t layer = 0;
    for (Qubit q : op.qubits) layer = std::max(layer, wire_depth[q]);
    ++layer;
    for (Qubit q : op.qubits) wire_depth[q] = layer;
    m.depth = std::max(m.depth, layer);
    if (op.qubits.size() == 2) ++m.two_qubit_count;
  }
  return m;
}

std::uint64_t Circuit::fingerprint() const {
  Fnv h;
  h.add(num_qubits_);
  for (const Instruction& op : ops_) {
    h.add(static_cast<std::uint64_t>(op.type));
    h.add(op.qubits.size());
    for (Qubit q : op.qubits) h.add(q);
    h.add(std::bit_cast<std::uint64_t>(op.angle));
    h.add(static_cast<std::uint64_t>(op.ticks));
    for (char c : op.label) h.add(static_cast<unsigned char>(c));
  }
  return h.value();
}

void append_qft_body(Circuit& out, const std::vector<Qubit>& qubits) {
  const std::size_t n = qubits.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.append(Instruction::h(qubits[i]));
    for (std::size_t j = i + 1; j < n; ++j) {
      const double theta =
          std::numbers::pi / std::ldexp(1.0, static_cast<int>(j - i));
      out.append(Instruction::cp(theta, qubits[j], qubits[i]));
    }
  }
  for (std::size_t i = 0; i < n / 2; ++i) {
    out.append(Instruction::swap(qubits[i], qubits[n - 1 - i]));
  }
}

Circuit build_qft(std::size_t n, bool boxed) {
  if (n == 0) throw InvalidSize("QFT needs at least one qubit");
  Circuit c(n, "qft");
  std::vector<Qubit> wires(n);
  for (std::size_t i = 0; i < n; ++i) wires[i] = static_cast<Qubit>(i);
  if (boxed) {
    c.append(Instruction::box("qft", std::move(wires)));
  } else {
    append_qft_body(c, wires);
  }
  return c;
}

Circuit build_ghz(std::size_t n) {
  if (n == 0) throw InvalidSize("GHZ needs at least one qubit");
  Circuit c(n, "ghz");
  c.append(Instruction::h(0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    c.append(Instruction::cx(static_cast<Qubit>(i), static_cast<Qubit>(i + 1)));
  }
  return c;
}

}  // namespace qprof
