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

// The built-in compilation passes. Each transformation is available as a
// plain function and as a Task for pipelines.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qprof/circuit.hpp"
#include "qprof/layout.hpp"
#include "qprof/pass.hpp"
#include "qprof/target.hpp"
#include "qprof/vf2.hpp"

namespace qprof {

// Stable pass names, as they appear in profiles.
namespace pass_names {
inline constexpr const char* kTrivialLayout = "TrivialLayout";
inline constexpr const char* kVF2Layout = "VF2Layout";
inline constexpr const char* kSwapRoute = "SwapRoute";
inline constexpr const char* kPreExpandBoxes = "PreExpandBoxes";
inline constexpr const char* kHighLevelSynthesis = "HighLevelSynthesis";
inline constexpr const char* kBasisTranslate = "BasisTranslate";
inline constexpr const char* kInverseCancellation = "InverseCancellation";
inline constexpr const char* kOptimize1QGates = "Optimize1QGates";
inline constexpr const char* kFixedPoint = "FixedPoint";
inline constexpr const char* kMinimumPoint = "MinimumPoint";
inline constexpr const char* kASAPSchedule = "ASAPSchedule";
}  // namespace pass_names

// --- layout -----------------------------------------------------------------

/// Virtual qubits with the pairs they interact on, weighted by the number of
/// two-qubit instructions per pair.
struct InteractionGraph {
  std::size_t num_nodes = 0;
  std::map<std::pair<Qubit, Qubit>, std::size_t> weights;

  UndirectedGraph graph() const;
};

InteractionGraph interaction_graph(const Circuit& circuit);

/// Virtual i -> physical i. Throws CapacityError if the circuit is wider
/// than the target.
Layout trivial_layout(const Circuit& circuit, const Target& target);

struct Vf2LayoutResult {
  std::optional<Layout> layout;
  std::size_t states_visited = 0;
};

/// Subgraph-monomorphism layout. Not-found (within budget) is a normal
/// outcome, reported as an empty `layout`. Exhaustive scoring minimises the
/// summed two-qubit error of the mapped interaction edges.
Vf2LayoutResult vf2_layout(const Circuit& circuit, const Target& target,
                           const Vf2Budget& budget);

// --- routing ----------------------------------------------------------------

struct RoutingResult {
  /// Circuit over the target's physical qubits.
  Circuit circuit;
  /// Input layout with `output_permutation` updated by the inserted SWAPs.
  Layout layout;
  std::size_t swaps_inserted = 0;
};

/// Applies `layout` and inserts SWAPs so that every two-qubit gate acts on a
/// coupled pair. Gates are taken from the DAG front layer in index order;
/// a blocked gate moves its first qubit along a BFS shortest path (lowest
/// index first on ties) until adjacent. Throws RoutingError when an
/// interacting pair sits in different components of the coupling graph.
RoutingResult swap_route(const Circuit& circuit, const Layout& layout,
                         const Target& target);

// --- synthesis / translation ------------------------------------------------

/// Expands every BOX until none remain. Throws UnsupportedOperation on an
/// unknown box name.
Circuit high_level_synthesis(const Circuit& circuit);

/// Rewrites every gate into `target.basis()` (DELAY passes through).
/// Throws TranslationError when no rule chain reaches the basis.
Circuit basis_translate(const Circuit& circuit, const Target& target);

// --- optimization -----------------------------------------------------------

/// Removes adjacent inverse pairs on identical qubit tuples (CX CX, H H,
/// X X, SWAP SWAP, RZ(a) RZ(-a)) until none remain.
Circuit inverse_cancellation(const Circuit& circuit);

/// Resynthesises runs of two or more one-qubit gates as at most
/// RZ SX RZ SX RZ. A run is only replaced when that does not make it longer.
Circuit optimize_1q_gates(const Circuit& circuit);

// --- scheduling -------------------------------------------------------------

struct Schedule {
  /// Input with idle gaps filled by DELAY instructions.
  Circuit circuit;
  /// Start tick of each instruction of `circuit`.
  std::vector<Ticks> start_times;
  Ticks total = 0;
};

/// As-soon-as-possible schedule using the target's gate durations. Throws
/// SchedulingError naming the gate when a duration is missing.
Schedule asap_schedule(const Circuit& circuit, const Target& target);

// --- pass objects -----------------------------------------------------------

TaskPtr make_trivial_layout();
TaskPtr make_vf2_layout(const Vf2Budget& budget);
TaskPtr make_swap_route();
TaskPtr make_pre_expand_boxes();
TaskPtr make_high_level_synthesis();
TaskPtr make_basis_translate();
TaskPtr make_inverse_cancellation();
TaskPtr make_optimize_1q_gates();
TaskPtr make_asap_schedule();

/// Descriptor of a built-in pass or controller by stable name.
const PassDescriptor& builtin_descriptor(const std::string& name);

}  // namespace qprof
