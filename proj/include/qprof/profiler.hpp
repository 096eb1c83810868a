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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qprof/pass.hpp"
#include "qprof/recorder.hpp"
#include "qprof/stage.hpp"

namespace qprof {

enum class Category {
  kGateSynthesis,
  kQubitMapping,
  kCircuitOptimization,
  kScheduling,
  kUncategorized,
};

/// "gate-synthesis", "qubit-mapping", "circuit-optimization", "scheduling",
/// "uncategorized".
const char* category_name(Category c);
Category category_from_name(const std::string& name);

/// Category of a pass from the module it lives in. Passes from the generic
/// modules (basis, utils, or any module not listed below) are placed by
/// the stage they ran in, and left uncategorized when they ran in more than
/// one stage.
///
///   synthesis              -> gate-synthesis
///   layout, routing        -> qubit-mapping
///   optimization           -> circuit-optimization
///   scheduling             -> scheduling
Category categorize(const PassDescriptor& descriptor,
                    const std::set<Stage>& stages_seen);

/// Looks the pass up first; throws UnknownPass if it is not registered.
Category categorize(const std::string& pass_name,
                    const std::set<Stage>& stages_seen,
                    const PassRegistry& registry);

struct PassAggregate {
  std::string pass_name;
  Nanoseconds cumulative_time = 0;
  std::size_t invocation_count = 0;
  Category category = Category::kUncategorized;
  std::set<Stage> stages_seen;

  friend bool operator==(const PassAggregate&, const PassAggregate&) = default;
};

/// Sums the records of one pipeline run per pass name, across stages and
/// loop iterations. Output is sorted by pass name. Throws InvalidArgument if
/// the records carry more than one run_id.
std::vector<PassAggregate> aggregate(
    const std::vector<RunRecord>& records,
    const PassRegistry& registry = PassRegistry::builtin());

/// The `n` most expensive passes, by cumulative time descending and then
/// name ascending.
std::vector<PassAggregate> top_n(std::vector<PassAggregate> aggregates,
                                 std::size_t n = 10);

/// 100 * part / total. Throws UndefinedShare if total is not positive.
double share_of_total(Nanoseconds part, Nanoseconds total);
inline double share_of_total(const PassAggregate& a, Nanoseconds total) {
  return share_of_total(a.cumulative_time, total);
}

/// Linear interpolation between order statistics at h = (n - 1) p.
/// `sorted` must be non-empty and ascending.
double quantile(const std::vector<double>& sorted, double p);

struct FiveNumber {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;

  friend bool operator==(const FiveNumber&, const FiveNumber&) = default;
};

/// Throws InvalidArgument on an empty sample.
FiveNumber five_number(std::vector<double> samples);

struct Configuration {
  std::string circuit;
  std::size_t qubits = 0;
  int level = 0;
  std::string target;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Aggregates and total wall time of one repetition.
struct RepetitionResult {
  Configuration configuration;
  std::vector<PassAggregate> aggregates;
  Nanoseconds total_time = 0;
};

struct PassSummary {
  std::string pass_name;
  Category category = Category::kUncategorized;
  /// Cumulative nanoseconds per repetition; absent repetitions count as 0.
  FiveNumber time_ns;
  /// Median share of the total compile time, in percent.
  double median_share = 0.0;
  /// Median invocation count.
  double median_invocations = 0.0;

  friend bool operator==(const PassSummary&, const PassSummary&) = default;
};

struct ExperimentSummary {
  Configuration configuration;
  std::size_t repetitions = 0;
  /// Every pass seen in any repetition, ranked by median time descending
  /// (ties by name).
  std::vector<PassSummary> passes;
  /// Names of the first `top` entries of `passes`.
  std::vector<std::string> top;
  FiveNumber total_time_ns;
  /// Adjacent pairs in the ranking whose medians differ by less than the
  /// near-tie threshold; their relative order is not meaningful.
  std::vector<std::pair<std::string, std::string>> near_ties;
  double near_tie_threshold = 0.01;

  friend bool operator==(const ExperimentSummary&,
                         const ExperimentSummary&) = default;
};

/// Five-number summaries over repetitions. Throws InvalidArgument on an
/// empty input or repetitions with different configurations. The result
/// does not depend on the order of `runs`.
ExperimentSummary summarize(const std::vector<RepetitionResult>& runs,
                            std::size_t top = 10,
                            double near_tie_threshold = 0.01);

}  // namespace qprof
