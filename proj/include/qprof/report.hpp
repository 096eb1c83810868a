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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qprof/pass.hpp"
#include "qprof/profiler.hpp"
#include "qprof/recorder.hpp"

namespace qprof {

// File formats written by the profiler. Every writer has a matching parser
// so emitted files can be read back.

/// Header of the records export.
inline constexpr std::string_view kRecordsHeader =
    "run_id,stage,pass_name,iteration,wall_time_ns";

std::string records_to_csv(const std::vector<RunRecord>& records);
/// Throws ParseError with the offending line.
std::vector<RunRecord> parse_records_csv(std::string_view text);

/// Summary as a JSON document. Key names are stable:
///
///   configuration {circuit, qubits, level, target}, repetitions,
///   near_tie_threshold, total_time_ns {min, q1, median, q3, max},
///   passes [{pass_name, category, median_share_pct, median_invocations,
///            time_ns {...}}], top [names], near_ties [[a, b]]
std::string summary_to_json(const ExperimentSummary& summary);
/// Throws ParseError on malformed documents.
ExperimentSummary parse_summary_json(std::string_view text);

/// Header of the plot-data export: one row per pass in ranking order.
inline constexpr std::string_view kPlotDataHeader =
    "rank,pass_name,category,min_ns,q1_ns,median_ns,q3_ns,max_ns,"
    "median_share_pct";

std::string plot_data_to_csv(const ExperimentSummary& summary);
std::vector<PassSummary> parse_plot_data_csv(std::string_view text);

/// Profile-style row: a code location, a function name, and the cumulative
/// time spent in it.
struct TraceRow {
  std::string path;
  std::string function;
  std::size_t calls = 0;
  Nanoseconds cumulative_ns = 0;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

/// Directory that pass rows live under.
inline constexpr std::string_view kPassesLocation = "qprof/transpiler/passes/";

/// One `run` row per pass, at `qprof/transpiler/passes/<module>/<name>`,
/// plus a pipeline row and a per-pass `execute` wrapper row outside that
/// filter, so the filter has something to discard.
std::vector<TraceRow> make_trace(const std::vector<PassAggregate>& aggregates,
                                 Nanoseconds total_time,
                                 const PassRegistry& registry =
                                     PassRegistry::builtin());

inline constexpr std::string_view kTraceHeader =
    "path,function,calls,cumulative_ns";
std::string trace_to_csv(const std::vector<TraceRow>& rows);
std::vector<TraceRow> parse_trace_csv(std::string_view text);

/// Keeps rows whose path contains the passes location and whose function
/// is `run`, returning (pass name, cumulative ns) pairs, name ascending.
std::vector<std::pair<std::string, Nanoseconds>> filter_trace(
    const std::vector<TraceRow>& rows);

/// One optimization level in a level comparison.
struct ComparisonRow {
  int level = 0;
  double total_median_ns = 0.0;
  std::string top1_pass;
  double top1_share_pct = 0.0;
  /// Every pass that ran, in ranking order.
  std::vector<std::string> executed_passes;
  /// "ok", "failed" or "skipped".
  std::string verification = "skipped";

  friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

ComparisonRow comparison_row(const ExperimentSummary& summary,
                             std::string verification = "skipped");

/// Executed passes are joined with ';'.
inline constexpr std::string_view kComparisonHeader =
    "level,total_median_ns,top1_pass,top1_share_pct,executed_passes,"
    "verification";
std::string comparison_to_csv(const std::vector<ComparisonRow>& rows);
std::vector<ComparisonRow> parse_comparison_csv(std::string_view text);

}  // namespace qprof
