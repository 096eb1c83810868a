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

#include "qprof/pass_manager.hpp"

#include <sstream>

#include "qprof/errors.hpp"
#include "qprof/passes.hpp"

namespace qprof {

namespace {

std::size_t metric_value(const CircuitMetrics& m, Metric metric) {
  switch (metric) {
    case Metric::kSize:
      return m.size;
    case Metric::kDepth:
      return m.depth;
    case Metric::kTwoQubitCount:
      return m.two_qubit_count;
  }
  return 0;
}

std::vector<std::size_t> watched_values(const Circuit& c,
                                        const std::vector<Metric>& watched) {
  const CircuitMetrics m = c.metrics();
  std::vector<std::size_t> out;
  out.reserve(watched.size());
  for (Metric w : watched) out.push_back(metric_value(m, w));
  return out;
}

bool task_contains(const Task& task, const std::string& name) {
  if (task.name() == name) return true;
  if (const auto* fc = dynamic_cast<const FlowController*>(&task)) {
    for (const TaskPtr& child : fc->children()) {
      if (task_contains(*child, name)) return true;
    }
  }
  return false;
}

void register_task(PassRegistry& registry, const Task& task, Stage stage) {
  PassDescriptor d = task.descriptor();
  d.declared_stages.insert(stage);
  registry.add(std::move(d));
  if (const auto* fc = dynamic_cast<const FlowController*>(&task)) {
    for (const TaskPtr& child : fc->children()) {
      register_task(registry, *child, stage);
    }
  }
}

}  // namespace

Metric metric_from_name(const std::string& name) {
  if (name == "size") return Metric::kSize;
  if (name == "depth") return Metric::kDepth;
  if (name == "two_qubit_count") return Metric::kTwoQubitCount;
  throw InvalidArgument("unknown metric '" + name +
                        "' (expected size, depth or two_qubit_count)");
}

FixedPointController::FixedPointController(std::vector<TaskPtr> children,
                                           std::vector<Metric> watched,
                                           unsigned max_iterations)
    : FlowController(PassRegistry::builtin().at(pass_names::kFixedPoint),
                     std::move(children)),
      watched_(std::move(watched)),
      max_iterations_(max_iterations) {
  if (max_iterations_ < 1) {
    throw InvalidArgument("FixedPoint needs max_iterations >= 1");
  }
}

void FixedPointController::execute(Circuit& circuit,
                                   ExecutionState& state) const {
  const Nanoseconds wall_before = state.recorder.recorded_time();
  const Nanoseconds cpu_before = state.recorder.recorded_cpu_time();
  const Stopwatch watch = Stopwatch::start();

  std::vector<std::size_t> previous;
  unsigned iteration = 0;
  while (iteration < max_iterations_) {
    ++iteration;
    run_children(circuit, state, iteration);
    std::vector<std::size_t> current = watched_values(circuit, watched_);
    // The first iteration has nothing to compare against.
    if (iteration > 1 && current == previous) break;
    previous = std::move(current);
  }
  state.properties.set(props::kLoopIterations,
                       static_cast<std::int64_t>(iteration));
  record_self(state, watch, wall_before, cpu_before);
}

DepthSizeCost DepthSizeCost::of(const Circuit& c) {
  const CircuitMetrics m = c.metrics();
  return {m.depth, m.size};
}

MinimumPointController::MinimumPointController(std::vector<TaskPtr> children,
                                               unsigned backtrack_window,
                                               unsigned max_iterations)
    : FlowController(PassRegistry::builtin().at(pass_names::kMinimumPoint),
                     std::move(children)),
      window_(backtrack_window),
      max_iterations_(max_iterations) {
  if (window_ < 1 || max_iterations_ < 1) {
    throw InvalidArgument(
        "MinimumPoint needs backtrack_window >= 1 and max_iterations >= 1");
  }
}

void MinimumPointController::execute(Circuit& circuit,
                                     ExecutionState& state) const {
  const Nanoseconds wall_before = state.recorder.recorded_time();
  const Nanoseconds cpu_before = state.recorder.recorded_cpu_time();
  const Stopwatch watch = Stopwatch::start();

  MinimumPointState mp;
  mp.backtrack_window = window_;
  mp.best_cost = DepthSizeCost::of(circuit);
  mp.best_circuit = circuit;
  while (mp.iterations < max_iterations_ &&
         mp.since_improvement < mp.backtrack_window) {
    ++mp.iterations;
    run_children(circuit, state, mp.iterations);
    const DepthSizeCost cost = DepthSizeCost::of(circuit);
    if (cost < mp.best_cost) {
      mp.best_cost = cost;
      mp.best_circuit = circuit;
      mp.since_improvement = 0;
    } else {
      ++mp.since_improvement;
    }
  }
  circuit = std::move(mp.best_circuit);
  state.properties.set(props::kLoopIterations,
                       static_cast<std::int64_t>(mp.iterations));
  record_self(state, watch, wall_before, cpu_before);
}

TaskPtr fixed_point_controller(std::vector<TaskPtr> children,
                               const std::vector<std::string>& metric_keys,
                               unsigned max_iterations) {
  std::vector<Metric> watched;
  for (const std::string& key : metric_keys) {
    watched.push_back(metric_from_name(key));
  }
  return std::make_shared<FixedPointController>(
      std::move(children), std::move(watched), max_iterations);
}

TaskPtr minimum_point_controller(std::vector<TaskPtr> children,
                                 unsigned backtrack_window,
                                 unsigned max_iterations) {
  return std::make_shared<MinimumPointController>(
      std::move(children), backtrack_window, max_iterations);
}

std::optional<Layout> PipelineResult::layout() const {
  if (const Layout* l = properties.get<Layout>(props::kLayout)) return *l;
  return std::nullopt;
}

PassManager::PassManager(Target target, std::optional<int> optimization_level)
    : target_(std::move(target)), level_(optimization_level) {}

void PassManager::append(Stage stage, TaskPtr task) {
  if (!task) throw InvalidArgument("cannot append a null task");
  register_task(registry_, *task, stage);
  stages_[static_cast<std::size_t>(stage)].push_back(std::move(task));
}

bool PassManager::contains(const std::string& name) const {
  for (Stage s : kAllStages) {
    if (contains(s, name)) return true;
  }
  return false;
}

bool PassManager::contains(Stage stage, const std::string& name) const {
  for (const TaskPtr& t : entries(stage)) {
    if (task_contains(*t, name)) return true;
  }
  return false;
}

std::string PassManager::describe() const {
  std::ostringstream os;
  for (Stage s : kAllStages) {
    for (const TaskPtr& t : entries(s)) t->describe(os, s, 0);
  }
  return os.str();
}

PipelineResult PassManager::run(const Circuit& circuit,
                                Recorder& recorder) const {
  const Stopwatch watch = Stopwatch::start();
  PipelineResult result;
  result.circuit = circuit;
  ExecutionState state{target_, result.properties, recorder,
                       Stage::kInitialization, 0, check_analysis_};
  for (Stage s : kAllStages) {
    state.stage = s;
    for (const TaskPtr& t : entries(s)) t->execute(result.circuit, state);
  }
  result.total_time = watch.wall_elapsed();
  return result;
}

Vf2Budget default_vf2_budget(int level) {
  switch (level) {
    case 0:
    case 1:
      return {20'000, Vf2Scoring::kFirst};
    case 2:
      return {200'000, Vf2Scoring::kExhaustive};
    case 3:
      return {2'000'000, Vf2Scoring::kExhaustive};
    default:
      throw InvalidArgument("optimization level must be 0, 1, 2 or 3");
  }
}

PassManager build_preset(int level, const Target& target,
                         const PresetOptions& options) {
  if (level < 0 || level > 3) {
    throw InvalidArgument("optimization level must be 0, 1, 2 or 3, got " +
                          std::to_string(level));
  }
  PassManager pm(target, level);
  if (level == 0) {
    // Without pre-expansion, routing would see unexpanded boxes.
    pm.append(Stage::kInitialization, make_high_level_synthesis());
    pm.append(Stage::kLayout, make_trivial_layout());
  } else {
    pm.append(Stage::kInitialization, make_pre_expand_boxes());
    pm.append(Stage::kLayout,
              make_vf2_layout(options.vf2.value_or(default_vf2_budget(level))));
    pm.append(Stage::kLayout, make_trivial_layout());
  }
  pm.append(Stage::kRouting, make_swap_route());
  pm.append(Stage::kTranslation, make_high_level_synthesis());
  pm.append(Stage::kTranslation, make_basis_translate());

  if (level == 1) {
    pm.append(Stage::kOptimization, make_inverse_cancellation());
  } else if (level >= 2) {
    std::vector<TaskPtr> loop{make_inverse_cancellation(),
                              make_optimize_1q_gates()};
    if (level == 2) {
      pm.append(Stage::kOptimization,
                fixed_point_controller(std::move(loop), {"size", "depth"},
                                       options.fixed_point_max_iterations));
    } else {
      pm.append(Stage::kOptimization,
                minimum_point_controller(std::move(loop),
                                         options.minimum_point_window,
                                         options.minimum_point_max_iterations));
    }
  }
  pm.append(Stage::kScheduling, make_asap_schedule());
  return pm;
}

}  // namespace qprof
