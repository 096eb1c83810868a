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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qprof/circuit.hpp"
#include "qprof/pass.hpp"
#include "qprof/recorder.hpp"
#include "qprof/target.hpp"
#include "qprof/vf2.hpp"

namespace qprof {

enum class Metric { kSize, kDepth, kTwoQubitCount };

/// Parses "size", "depth" or "two_qubit_count".
Metric metric_from_name(const std::string& name);

/// Repeats its children until the watched metrics are unchanged between two
/// consecutive iterations, or `max_iterations` is reached.
class FixedPointController : public FlowController {
 public:
  FixedPointController(std::vector<TaskPtr> children,
                       std::vector<Metric> watched, unsigned max_iterations);

  void execute(Circuit& circuit, ExecutionState& state) const override;

  unsigned max_iterations() const { return max_iterations_; }

 private:
  std::vector<Metric> watched_;
  unsigned max_iterations_;
};

/// Cost ordering used by MinimumPoint: lexicographic (depth, size).
struct DepthSizeCost {
  std::size_t depth = 0;
  std::size_t size = 0;

  static DepthSizeCost of(const Circuit& c);
  friend auto operator<=>(const DepthSizeCost&, const DepthSizeCost&) = default;
};

struct MinimumPointState {
  DepthSizeCost best_cost;
  Circuit best_circuit;
  unsigned since_improvement = 0;
  unsigned backtrack_window = 5;
  unsigned iterations = 0;
};

/// Loops its children and keeps the cheapest circuit seen (the input
/// included). Stops after `backtrack_window` consecutive iterations without
/// a strict improvement, or after `max_iterations`; the circuit is then
/// restored to the best snapshot.
class MinimumPointController : public FlowController {
 public:
  explicit MinimumPointController(std::vector<TaskPtr> children,
                                  unsigned backtrack_window = 5,
                                  unsigned max_iterations = 1000);

  void execute(Circuit& circuit, ExecutionState& state) const override;

  unsigned backtrack_window() const { return window_; }

 private:
  unsigned window_;
  unsigned max_iterations_;
};

TaskPtr fixed_point_controller(std::vector<TaskPtr> children,
                               const std::vector<std::string>& metric_keys,
                               unsigned max_iterations);
TaskPtr minimum_point_controller(std::vector<TaskPtr> children,
                                 unsigned backtrack_window = 5,
                                 unsigned max_iterations = 1000);

struct PipelineResult {
  Circuit circuit;
  PropertySet properties;
  /// Wall time of the whole run, framework overhead included.
  Nanoseconds total_time = 0;

  /// Layout property if a layout/routing stage produced one.
  std::optional<Layout> layout() const;
};

/// Ordered stages, each an ordered list of tasks, bound to one target.
class PassManager {
 public:
  explicit PassManager(Target target,
                       std::optional<int> optimization_level = std::nullopt);

  /// Appends a task to a stage. The task's descriptor is registered with
  /// `stage` added to its declared stages.
  void append(Stage stage, TaskPtr task);

  const std::vector<TaskPtr>& entries(Stage stage) const {
    return stages_[static_cast<std::size_t>(stage)];
  }
  const Target& target() const { return target_; }
  std::optional<int> optimization_level() const { return level_; }
  const PassRegistry& registry() const { return registry_; }

  /// Whether a task with this name occurs anywhere, controllers included.
  bool contains(const std::string& name) const;
  bool contains(Stage stage, const std::string& name) const;

  /// One `stage/name` line per entry; controller children are indented.
  std::string describe() const;

  /// Hash-checks analysis passes for circuit mutation. Defaults to on in
  /// builds without NDEBUG.
  void set_check_analysis(bool on) { check_analysis_ = on; }

  /// Runs every stage in order. On failure a PassError is thrown and
  /// `recorder` keeps the records of passes that completed.
  PipelineResult run(const Circuit& circuit, Recorder& recorder) const;

 private:
  Target target_;
  std::optional<int> level_;
  std::array<std::vector<TaskPtr>, 6> stages_;
  PassRegistry registry_;
#ifdef NDEBUG
  bool check_analysis_ = false;
#else
  bool check_analysis_ = true;
#endif
};

inline PipelineResult run_pipeline(const PassManager& pm,
                                   const Circuit& circuit,
                                   Recorder& recorder) {
  return pm.run(circuit, recorder);
}

/// Knobs of the preset pipelines. Unset VF2 budgets use the per-level
/// defaults from `default_vf2_budget`.
struct PresetOptions {
  std::optional<Vf2Budget> vf2;
  unsigned fixed_point_max_iterations = 100;
  unsigned minimum_point_window = 5;
  unsigned minimum_point_max_iterations = 1000;
};

Vf2Budget default_vf2_budget(int level);

/// Preset pipeline for optimization level 0..3.
///
///   L0: init HighLevelSynthesis; TrivialLayout; SwapRoute;
///       HighLevelSynthesis, BasisTranslate; ASAPSchedule
///   L1: init PreExpandBoxes; VF2Layout, TrivialLayout (fallback); SwapRoute;
///       HighLevelSynthesis, BasisTranslate; InverseCancellation;
///       ASAPSchedule
///   L2: as L1, optimization = FixedPoint[InverseCancellation,
///       Optimize1QGates] on {size, depth}
///   L3: as L2 with the loop driven by MinimumPoint instead
///
/// Throws InvalidArgument for any other level.
PassManager build_preset(int level, const Target& target,
                         const PresetOptions& options = {});

}  // namespace qprof
