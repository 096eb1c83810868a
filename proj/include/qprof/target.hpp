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
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qprof/circuit.hpp"

namespace qprof {

struct GateCost {
  Ticks duration = 0;
  double error = 0.0;

  friend bool operator==(const GateCost&, const GateCost&) = default;
};

/// Undirected coupling edge, stored with first < second.
using Edge = std::pair<Qubit, Qubit>;

inline Edge make_edge(Qubit a, Qubit b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Hardware model: coupling graph, native basis and per-gate costs.
///
/// Two-qubit costs are keyed by coupling edge; one-qubit costs by gate name
/// and apply to every qubit. Immutable once constructed.
class Target {
 public:
  static constexpr Ticks kDefault1qDuration = 1;
  static constexpr Ticks kDefault2qDuration = 10;
  static constexpr double kDefault1qError = 1e-4;

  Target() = default;

  /// Validates every invariant; throws InvariantViolation naming the field.
  Target(std::size_t num_qubits, std::set<std::string> basis,
         std::map<Edge, GateCost> edges,
         std::map<std::string, GateCost> one_qubit_costs,
         std::string name = {});

  std::size_t num_qubits() const { return num_qubits_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const std::set<std::string>& basis() const { return basis_; }
  bool in_basis(std::string_view gate) const {
    return basis_.find(std::string(gate)) != basis_.end();
  }

  const std::map<Edge, GateCost>& edges() const { return edges_; }
  const std::map<std::string, GateCost>& one_qubit_costs() const {
    return one_qubit_costs_;
  }

  bool coupled(Qubit a, Qubit b) const {
    return a != b && edges_.count(make_edge(a, b)) != 0;
  }
  /// Sorted neighbour lists.
  const std::vector<Qubit>& neighbours(Qubit q) const { return adj_[q]; }
  std::size_t degree(Qubit q) const { return adj_[q].size(); }

  /// Cost of `gate` on `qubits`; nullopt when the target has no entry.
  std::optional<GateCost> cost(std::string_view gate,
                               const std::vector<Qubit>& qubits) const;
  double edge_error(Qubit a, Qubit b) const;

  bool connected() const;

  /// Equality of the hardware description; the display name is ignored.
  friend bool operator==(const Target& a, const Target& b) {
    return a.num_qubits_ == b.num_qubits_ && a.basis_ == b.basis_ &&
           a.edges_ == b.edges_ && a.one_qubit_costs_ == b.one_qubit_costs_;
  }

 private:
  std::size_t num_qubits_ = 0;
  std::string name_;
  std::set<std::string> basis_;
  std::map<Edge, GateCost> edges_;
  std::map<std::string, GateCost> one_qubit_costs_;
  std::vector<std::vector<Qubit>> adj_;
};

std::set<std::string> default_basis();

/// Synthetic error gradient used when no calibration is given:
/// 0.001 * (1 + (a + b) / n).
double default_edge_error(Qubit a, Qubit b, std::size_t num_qubits);

/// Builds a target from an edge list with default costs and basis.
Target make_target(std::size_t num_qubits, const std::vector<Edge>& edges,
                   std::string name = {});

Target line_target(std::size_t n);
Target grid_target(std::size_t rows, std::size_t cols);

// Text format (one directive per line, '#' comments):
//   qubits <n>
//   basis <name>...
//   edge <a> <b> [duration] [error]
//   gate1q <name> [duration] [error]
// Omitted edge values default to kDefault2qDuration and the synthetic error
// gradient; omitted gate1q values to kDefault1qDuration / kDefault1qError,
// and one-qubit basis gates without a gate1q line get those defaults too.
// `save_target` always writes every value, so its output round-trips
// byte for byte.
Target parse_target(std::string_view text, std::string name = {});
Target load_target(const std::filesystem::path& path);
std::string save_target(const Target& target);

/// Resolves `line:N`, `grid:RxC` or a file path.
Target resolve_target(std::string_view spec);

}  // namespace qprof
