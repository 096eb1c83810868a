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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qprof/stage.hpp"

namespace qprof {

using Nanoseconds = std::int64_t;

/// One timed pass (or controller) invocation.
struct RunRecord {
  std::string pass_name;
  Stage stage = Stage::kInitialization;
  /// 1-based loop index inside a flow controller, 0 outside.
  unsigned iteration = 0;
  Nanoseconds wall_time = 0;
  /// Thread CPU time, when the platform exposes it. Not used for ranking.
  std::optional<Nanoseconds> cpu_time;
  std::string run_id;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Collects the records of exactly one pipeline run.
class Recorder {
 public:
  explicit Recorder(std::string run_id = "run-0") : run_id_(std::move(run_id)) {}

  const std::string& run_id() const { return run_id_; }

  void add(RunRecord record);

  const std::vector<RunRecord>& records() const { return records_; }
  std::vector<RunRecord> take() && { return std::move(records_); }

  /// Sum of all recorded wall times so far.
  Nanoseconds recorded_time() const { return recorded_; }
  /// Sum of recorded CPU times (records without CPU time count as 0).
  Nanoseconds recorded_cpu_time() const { return recorded_cpu_; }

 private:
  std::string run_id_;
  std::vector<RunRecord> records_;
  Nanoseconds recorded_ = 0;
  Nanoseconds recorded_cpu_ = 0;
};

/// Monotonic wall clock plus thread CPU clock, read together.
struct Stopwatch {
  std::chrono::steady_clock::time_point wall_start;
  std::optional<Nanoseconds> cpu_start;

  static Stopwatch start();
  Nanoseconds wall_elapsed() const;
  std::optional<Nanoseconds> cpu_elapsed() const;
};

std::optional<Nanoseconds> thread_cpu_now();

}  // namespace qprof
