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
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qprof {

using Qubit = unsigned;
/// Abstract scheduling time unit.
using Ticks = std::int64_t;

enum class GateType { H, X, SX, RZ, CP, CX, SWAP, DELAY, BOX };

/// Canonical upper-case name ("H", "CX", ...). Also the target basis key.
std::string_view gate_name(GateType type);
std::optional<GateType> gate_type_from_name(std::string_view name);

/// Number of qubits a gate acts on, or nullopt for BOX (declared per use).
std::optional<std::size_t> fixed_arity(GateType type);

bool is_two_qubit(GateType type);

/// One operation in a circuit.
///
/// `angle` is meaningful for RZ and CP (radians), `ticks` for DELAY and
/// `label` for BOX. A BOX's arity is the length of `qubits`.
struct Instruction {
  GateType type = GateType::H;
  std::vector<Qubit> qubits;
  double angle = 0.0;
  Ticks ticks = 0;
  std::string label;

  static Instruction h(Qubit q) { return {GateType::H, {q}, 0.0, 0, {}}; }
  static Instruction x(Qubit q) { return {GateType::X, {q}, 0.0, 0, {}}; }
  static Instruction sx(Qubit q) { return {GateType::SX, {q}, 0.0, 0, {}}; }
  static Instruction rz(double theta, Qubit q) {
    return {GateType::RZ, {q}, theta, 0, {}};
  }
  static Instruction cp(double theta, Qubit control, Qubit target) {
    return {GateType::CP, {control, target}, theta, 0, {}};
  }
  static Instruction cx(Qubit control, Qubit target) {
    return {GateType::CX, {control, target}, 0.0, 0, {}};
  }
  static Instruction swap(Qubit a, Qubit b) {
    return {GateType::SWAP, {a, b}, 0.0, 0, {}};
  }
  static Instruction delay(Ticks d, Qubit q) {
    return {GateType::DELAY, {q}, 0.0, d, {}};
  }
  static Instruction box(std::string name, std::vector<Qubit> qubits) {
    return {GateType::BOX, std::move(qubits), 0.0, 0, std::move(name)};
  }

  std::string_view name() const { return gate_name(type); }

  /// Throws InvariantViolation on a malformed instruction (arity, repeated
  /// qubits, non-finite angle, negative delay).
  void validate() const;

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

struct CircuitMetrics {
  std::size_t depth = 0;
  std::size_t size = 0;
  std::size_t two_qubit_count = 0;

  friend bool operator==(const CircuitMetrics&, const CircuitMetrics&) =
      default;
};

/// An ordered gate list over `num_qubits` wires.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t num_qubits, std::string name = {});

  std::size_t num_qubits() const { return num_qubits_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const std::vector<Instruction>& instructions() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }
  const Instruction& operator[](std::size_t i) const { return ops_[i]; }

  /// Validates the instruction against this circuit, then appends it.
  Circuit& append(Instruction op);
  Circuit& append(std::initializer_list<Instruction> ops);

  /// Replaces the body. Every instruction is validated.
  void assign(std::vector<Instruction> ops);
  std::vector<Instruction> release() && { return std::move(ops_); }

  CircuitMetrics metrics() const;

  /// Stable hash of the gate list; used to check that analysis passes do not
  /// mutate the circuit.
  std::uint64_t fingerprint() const;

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.num_qubits_ == b.num_qubits_ && a.ops_ == b.ops_;
  }

 private:
  void check(const Instruction& op) const;

  std::size_t num_qubits_ = 0;
  std::string name_;
  std::vector<Instruction> ops_;
};

/// Textbook QFT (H + controlled phases + final reversal swaps), or a single
/// BOX("qft", n) when `boxed`.
Circuit build_qft(std::size_t n, bool boxed = false);

/// H on qubit 0 followed by the nearest-neighbour CX chain.
Circuit build_ghz(std::size_t n);

/// Appends the textbook QFT body on `qubits` (in order) to `out`.
void append_qft_body(Circuit& out, const std::vector<Qubit>& qubits);

// Text form:
//   qubits <n>
//   name <identifier>        (optional)
//   GATE[(param)] q<i>[, q<j>...]
// '#' starts a comment. Angles are written in shortest round-trip form.
std::string to_text(const Circuit& circuit);
void write_text(std::ostream& os, const Circuit& circuit);
Circuit parse_circuit(std::string_view text);
Circuit read_circuit(std::istream& is);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace qprof
