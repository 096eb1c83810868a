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

#include "qprof/pass.hpp"

#include <time.h>

#include <algorithm>
#include <ostream>

#include "qprof/errors.hpp"

namespace qprof {

namespace {

constexpr std::array<std::string_view, 6> kStageNames = {
    "initialization", "layout",       "routing",
    "translation",    "optimization", "scheduling"};

}  // namespace

std::string_view stage_name(Stage stage) {
  return kStageNames[static_cast<std::size_t>(stage)];
}

std::optional<Stage> stage_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kStageNames.size(); ++i) {
    if (kStageNames[i] == name) return static_cast<Stage>(i);
  }
  return std::nullopt;
}

// --- recorder ---------------------------------------------------------------

void Recorder::add(RunRecord record) {
  if (record.run_id.empty()) record.run_id = run_id_;
  recorded_ += record.wall_time;
  recorded_cpu_ += record.cpu_time.value_or(0);
  records_.push_back(std::move(record));
}

std::optional<Nanoseconds> thread_cpu_now() {
#ifdef CLOCK_THREAD_CPUTIME_ID
  timespec ts{};
  if (clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts) == 0) {
    return static_cast<Nanoseconds>(ts.tv_sec) * 1'000'000'000 + ts.tv_nsec;
  }
#endif
  return std::nullopt;
}

Stopwatch Stopwatch::start() {
  return {std::chrono::steady_clock::now(), thread_cpu_now()};
}

Nanoseconds Stopwatch::wall_elapsed() const {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::steady_clock::now() - wall_start)
      .count();
}

std::optional<Nanoseconds> Stopwatch::cpu_elapsed() const {
  auto now = thread_cpu_now();
  if (!now || !cpu_start) return std::nullopt;
  return *now - *cpu_start;
}

// --- layout -----------------------------------------------------------------

Layout Layout::identity(std::size_t num_virtual, std::size_t num_physical) {
  std::vector<Qubit> map(num_virtual);
  for (std::size_t i = 0; i < num_virtual; ++i) map[i] = static_cast<Qubit>(i);
  return from_mapping(std::move(map), num_physical);
}

Layout Layout::from_mapping(std::vector<Qubit> virtual_to_physical,
                            std::size_t num_physical) {
  Layout l;
  l.virtual_to_physical = std::move(virtual_to_physical);
  l.output_permutation.resize(num_physical);
  for (std::size_t p = 0; p < num_physical; ++p) {
    l.output_permutation[p] = static_cast<Qubit>(p);
  }
  l.validate();
  return l;
}

std::vector<Qubit> Layout::final_positions() const {
  std::vector<Qubit> out(virtual_to_physical.size());
  for (std::size_t v = 0; v < out.size(); ++v) {
    out[v] = output_permutation[virtual_to_physical[v]];
  }
  return out;
}

void Layout::validate() const {
  const std::size_t m = output_permutation.size();
  std::vector<bool> used(m, false);
  for (Qubit p : virtual_to_physical) {
    if (p >= m) {
      throw InvariantViolation("virtual_to_physical",
                               "physical qubit " + std::to_string(p) +
                                   " out of range");
    }
    if (used[p]) {
      throw InvariantViolation("virtual_to_physical",
                               "physical qubit " + std::to_string(p) +
                                   " assigned twice");
    }
    used[p] = true;
  }
  std::vector<bool> hit(m, false);
  for (Qubit p : output_permutation) {
    if (p >= m || hit[p]) {
      throw InvariantViolation("output_permutation", "not a permutation");
    }
    hit[p] = true;
  }
}

// --- registry ---------------------------------------------------------------

void PassRegistry::add(PassDescriptor descriptor) {
  if (descriptor.name.empty()) {
    throw InvalidArgument("pass descriptor needs a name");
  }
  if (descriptor.module.empty()) {
    throw InvalidArgument("pass " + descriptor.name + " needs a module");
  }
  auto it = by_name_.find(descriptor.name);
  if (it != by_name_.end()) {
    if (it->second.module != descriptor.module ||
        it->second.kind != descriptor.kind) {
      throw InvalidArgument("conflicting registration for pass " +
                            descriptor.name);
    }
    it->second.declared_stages.insert(descriptor.declared_stages.begin(),
                                      descriptor.declared_stages.end());
    return;
  }
  std::string name = descriptor.name;
  by_name_.emplace(std::move(name), std::move(descriptor));
}

void PassRegistry::amend_stage(const std::string& name, Stage stage) {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) throw UnknownPass("unknown pass " + name);
  it->second.declared_stages.insert(stage);
}

const PassDescriptor* PassRegistry::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &it->second;
}

const PassDescriptor& PassRegistry::at(const std::string& name) const {
  if (auto* d = find(name)) return *d;
  throw UnknownPass("unknown pass " + name);
}

std::vector<std::string> PassRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, d] : by_name_) out.push_back(name);
  return out;
}

// --- tasks ------------------------------------------------------------------

PassError::PassError(std::string pass, Stage stage, std::string cause)
    : std::runtime_error("pass " + pass + " failed in stage " +
                         std::string(stage_name(stage)) + ": " + cause),
      pass_(std::move(pass)),
      stage_(stage),
      cause_(std::move(cause)) {}

void Task::describe(std::ostream& os, Stage stage, int depth) const {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ')
     << stage_name(stage) << '/' << name() << '\n';
}

void Pass::execute(Circuit& circuit, ExecutionState& state) const {
  std::optional<std::uint64_t> before;
  if (state.check_analysis && descriptor_.kind == PassKind::kAnalysis) {
    before = circuit.fingerprint();
  }
  PassContext context{state.target, state.properties};
  const Stopwatch watch = Stopwatch::start();
  try {
    run(circuit, context);
  } catch (const PassError&) {
    throw;
  } catch (const std::exception& e) {
    throw PassError(descriptor_.name, state.stage, e.what());
  }
  RunRecord record{descriptor_.name, state.stage, state.iteration,
                   watch.wall_elapsed(), watch.cpu_elapsed(), {}};
  if (before && *before != circuit.fingerprint()) {
    throw PassError(descriptor_.name, state.stage,
                    "analysis pass modified the circuit");
  }
  state.recorder.add(std::move(record));
}

void Pass::run_once(Circuit& circuit, const Target& target,
                    PropertySet& properties) const {
  PassContext context{target, properties};
  run(circuit, context);
}

void FlowController::describe(std::ostream& os, Stage stage,
                              int depth) const {
  Task::describe(os, stage, depth);
  for (const TaskPtr& child : children_) {
    child->describe(os, stage, depth + 1);
  }
}

void FlowController::run_children(Circuit& circuit, ExecutionState& state,
                                  unsigned iteration) const {
  const unsigned saved = state.iteration;
  state.iteration = iteration;
  for (const TaskPtr& child : children_) child->execute(circuit, state);
  state.iteration = saved;
}

void FlowController::record_self(ExecutionState& state, const Stopwatch& watch,
                                 Nanoseconds wall_before,
                                 Nanoseconds cpu_before) const {
  const Recorder& rec = state.recorder;
  const Nanoseconds wall = std::max<Nanoseconds>(
      0, watch.wall_elapsed() - (rec.recorded_time() - wall_before));
  std::optional<Nanoseconds> cpu = watch.cpu_elapsed();
  if (cpu) {
    *cpu = std::max<Nanoseconds>(
        0, *cpu - (rec.recorded_cpu_time() - cpu_before));
  }
  state.recorder.add(RunRecord{descriptor_.name, state.stage, state.iteration,
                               wall, cpu, {}});
}

}  // namespace qprof
