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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qprof/circuit.hpp"
#include "qprof/layout.hpp"

namespace qprof {

// Dense statevector simulation. Basis index bit k is qubit k (qubit 0 is the
// least significant bit).

using Amplitude = std::complex<double>;
using StateVector = std::vector<Amplitude>;

inline constexpr std::size_t kMaxSimQubits = 12;
inline constexpr std::size_t kMaxUnitaryQubits = 6;
inline constexpr std::size_t kMaxSweepQubits = 10;

/// Applies one gate in place. DELAY is the identity; BOX is rejected.
void apply_instruction(StateVector& state, const Instruction& op);

/// Runs `c` on the computational basis state `input` (|0...0> by default).
/// Throws SimulationError for more than 12 qubits or unexpanded BOX ops.
StateVector simulate(const Circuit& c, std::uint64_t input = 0);

/// Square complex matrix, row-major.
struct Matrix {
  std::size_t dim = 0;
  std::vector<Amplitude> data;

  Amplitude& operator()(std::size_t r, std::size_t c) {
    return data[r * dim + c];
  }
  const Amplitude& operator()(std::size_t r, std::size_t c) const {
    return data[r * dim + c];
  }
};

/// Full operator of `c`; at most 6 qubits.
Matrix unitary(const Circuit& c);

/// Max-entry distance between `a` and `b` after removing one global phase
/// taken from the first entry of `a` with magnitude above 1e-10.
double phase_distance(const Matrix& a, const Matrix& b);

struct EquivalenceReport {
  bool equivalent = false;
  /// Largest amplitude deviation seen across every basis input.
  double max_deviation = 0.0;
  /// First basis input (over the reference's qubits) exceeding `tol`.
  std::optional<std::uint64_t> first_failure;
};

/// Sweeps every basis input of `reference` (at most 10 qubits). The compiled
/// circuit receives that input on the layout's initial physical qubits, with
/// ancillas at |0>, and must produce the reference output on the layout's
/// final positions, up to one global phase common to all inputs. Without a
/// layout the qubit counts must match and the mapping is the identity.
EquivalenceReport check_equivalence(const Circuit& reference,
                                    const Circuit& compiled,
                                    const std::optional<Layout>& layout,
                                    double tol = 1e-8);

inline bool equivalent(const Circuit& reference, const Circuit& compiled,
                       const std::optional<Layout>& layout = std::nullopt,
                       double tol = 1e-8) {
  return check_equivalence(reference, compiled, layout, tol).equivalent;
}

}  // namespace qprof
