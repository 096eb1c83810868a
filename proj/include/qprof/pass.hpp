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

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qprof/circuit.hpp"
#include "qprof/layout.hpp"
#include "qprof/recorder.hpp"
#include "qprof/stage.hpp"
#include "qprof/target.hpp"

namespace qprof {

enum class PassKind { kAnalysis, kTransformation };

/// Static identity of a pass. `name` is the aggregation key in profiles and
/// `module` drives categorization.
struct PassDescriptor {
  std::string name;
  PassKind kind = PassKind::kTransformation;
  std::string module;
  std::set<Stage> declared_stages;

  friend bool operator==(const PassDescriptor&, const PassDescriptor&) =
      default;
};

/// Name-indexed descriptor table.
class PassRegistry {
 public:
  /// Throws InvalidArgument on an empty module or a conflicting name.
  void add(PassDescriptor descriptor);
  /// Adds `stage` to the declared stages of an already registered pass.
  void amend_stage(const std::string& name, Stage stage);

  const PassDescriptor* find(const std::string& name) const;
  /// Throws UnknownPass.
  const PassDescriptor& at(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name); }
  std::vector<std::string> names() const;

  /// Descriptors of every built-in pass and controller.
  static const PassRegistry& builtin();

 private:
  std::map<std::string, PassDescriptor> by_name_;
};

using PropertyValue = std::variant<bool, std::int64_t, double, std::string,
                                   std::vector<std::int64_t>, Layout>;

/// Keyed state shared by the passes of one pipeline run.
class PropertySet {
 public:
  void set(const std::string& key, PropertyValue value) {
    values_[key] = std::move(value);
  }
  bool contains(const std::string& key) const {
    return values_.count(key) != 0;
  }
  void erase(const std::string& key) { values_.erase(key); }
  void clear() { values_.clear(); }
  std::size_t size() const { return values_.size(); }

  /// nullptr when absent or holding another type.
  template <class T>
  const T* get(const std::string& key) const {
    auto it = values_.find(key);
    return it == values_.end() ? nullptr : std::get_if<T>(&it->second);
  }

 private:
  std::map<std::string, PropertyValue> values_;
};

// Well-known property keys.
namespace props {
inline constexpr const char* kLayout = "layout";
inline constexpr const char* kVf2Found = "vf2_layout_found";
inline constexpr const char* kVf2States = "vf2_states_visited";
inline constexpr const char* kScheduleStart = "schedule_start_times";
inline constexpr const char* kScheduleDuration = "schedule_total_ticks";
inline constexpr const char* kLoopIterations = "loop_iterations";
}  // namespace props

/// What a pass sees while running.
struct PassContext {
  const Target& target;
  PropertySet& properties;
};

/// Execution state threaded through passes and flow controllers.
struct ExecutionState {
  const Target& target;
  PropertySet& properties;
  Recorder& recorder;
  Stage stage = Stage::kInitialization;
  unsigned iteration = 0;
  bool check_analysis = false;
};

/// A pass failure, annotated with where it happened.
class PassError : public std::runtime_error {
 public:
  PassError(std::string pass, Stage stage, std::string cause);

  const std::string& pass() const { return pass_; }
  Stage stage() const { return stage_; }
  const std::string& cause() const { return cause_; }

 private:
  std::string pass_;
  Stage stage_;
  std::string cause_;
};

/// Anything that can be placed in a stage: a pass or a flow controller.
class Task {
 public:
  virtual ~Task() = default;

  virtual const PassDescriptor& descriptor() const = 0;
  const std::string& name() const { return descriptor().name; }

  virtual void execute(Circuit& circuit, ExecutionState& state) const = 0;

  /// Writes `stage/name` at the given indentation, then any children.
  virtual void describe(std::ostream& os, Stage stage, int depth) const;
};

using TaskPtr = std::shared_ptr<const Task>;

/// A single compilation step. Subclasses implement `run`; `execute` adds
/// timing, recording and error annotation.
class Pass : public Task {
 public:
  explicit Pass(PassDescriptor descriptor)
      : descriptor_(std::move(descriptor)) {}

  const PassDescriptor& descriptor() const override { return descriptor_; }
  void execute(Circuit& circuit, ExecutionState& state) const final;

  /// Runs the pass without instrumentation.
  void run_once(Circuit& circuit, const Target& target,
                PropertySet& properties) const;

 protected:
  virtual void run(Circuit& circuit, PassContext& context) const = 0;

 private:
  PassDescriptor descriptor_;
};

/// A task that orchestrates child tasks. Its own record covers only the
/// orchestration time; children record themselves.
class FlowController : public Task {
 public:
  FlowController(PassDescriptor descriptor, std::vector<TaskPtr> children)
      : descriptor_(std::move(descriptor)), children_(std::move(children)) {}

  const PassDescriptor& descriptor() const override { return descriptor_; }
  const std::vector<TaskPtr>& children() const { return children_; }
  void describe(std::ostream& os, Stage stage, int depth) const override;

 protected:
  /// Runs every child once with the given iteration index.
  void run_children(Circuit& circuit, ExecutionState& state,
                    unsigned iteration) const;
  /// Emits the controller's own record: elapsed time minus whatever the
  /// children recorded since the recorder totals were `*_before`.
  void record_self(ExecutionState& state, const Stopwatch& watch,
                   Nanoseconds wall_before, Nanoseconds cpu_before) const;

 private:
  PassDescriptor descriptor_;
  std::vector<TaskPtr> children_;
};

}  // namespace qprof
