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
#include <optional>
#include <string>
#include <vector>

#include "qprof/circuit.hpp"
#include "qprof/layout.hpp"
#include "qprof/pass_manager.hpp"
#include "qprof/profiler.hpp"
#include "qprof/recorder.hpp"
#include "qprof/target.hpp"

namespace qprof {

/// Builds a named workload: "qft" or "ghz", optionally as one BOX.
/// Throws InvalidArgument for other names.
Circuit make_workload(const std::string& name, std::size_t qubits,
                      bool boxed = false);

struct ExperimentSpec {
  std::string circuit = "ghz";
  std::size_t qubits = 3;
  bool boxed = false;
  int level = 1;
  std::size_t repetitions = 30;
  /// Worker threads; each owns its pass manager. Repetitions are
  /// independent, so results only differ in timing.
  unsigned jobs = 1;
  std::size_t top = 10;
  double near_tie_threshold = 0.01;
  PresetOptions preset;
};

struct ExperimentRun {
  /// Records of every repetition; run ids are "rep-0", "rep-1", ...
  std::vector<RunRecord> records;
  std::vector<RepetitionResult> repetitions;
  ExperimentSummary summary;
  Circuit input;
  /// Output of the first repetition (every repetition compiles the same).
  Circuit compiled;
  std::optional<Layout> layout;
};

/// Compiles the workload `spec.repetitions` times with the preset for
/// `spec.level` and profiles every pass. A compile failure propagates as
/// PassError.
ExperimentRun run_experiment(const ExperimentSpec& spec, const Target& target);

}  // namespace qprof
