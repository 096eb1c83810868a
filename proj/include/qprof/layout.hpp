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
#include <vector>

#include "qprof/circuit.hpp"

namespace qprof {

/// Placement of virtual qubits on physical qubits, plus the relabelling
/// accumulated by routing.
///
/// `output_permutation` is indexed by physical qubit: the state that starts
/// on physical p ends on physical `output_permutation[p]`. It covers every
/// physical qubit so that states moved through unused (ancilla) qubits stay
/// representable.
struct Layout {
  std::vector<Qubit> virtual_to_physical;
  std::vector<Qubit> output_permutation;

  static Layout identity(std::size_t num_virtual, std::size_t num_physical);
  static Layout from_mapping(std::vector<Qubit> virtual_to_physical,
                             std::size_t num_physical);

  std::size_t num_virtual() const { return virtual_to_physical.size(); }
  std::size_t num_physical() const { return output_permutation.size(); }

  /// Physical qubit holding each virtual qubit's state at circuit end.
  std::vector<Qubit> final_positions() const;

  /// Throws InvariantViolation if the map is not injective, out of range, or
  /// the permutation is not a bijection.
  void validate() const;

  friend bool operator==(const Layout&, const Layout&) = default;
};

}  // namespace qprof
