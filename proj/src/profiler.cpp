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

#include "qprof/profiler.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>

#include "qprof/errors.hpp"

namespace qprof {

namespace {

constexpr std::array<const char*, 5> kCategoryNames = {
    "gate-synthesis", "qubit-mapping", "circuit-optimization", "scheduling",
    "uncategorized"};

Category category_of_stage(Stage s) {
  switch (s) {
    case Stage::kTranslation:
      return Category::kGateSynthesis;
    case Stage::kLayout:
    case Stage::kRouting:
      return Category::kQubitMapping;
    case Stage::kOptimization:
      return Category::kCircuitOptimization;
    case Stage::kScheduling:
      return Category::kScheduling;
    case Stage::kInitialization:
      break;
  }
  // The initialization stage has no category of its own.
  return Category::kUncategorized;
}

bool ranks_before(double t_a, const std::string& a, double t_b,
                  const std::string& b) {
  if (t_a != t_b) return t_a > t_b;
  return a < b;
}

}  // namespace

const char* category_name(Category c) {
  return kCategoryNames[static_cast<std::size_t>(c)];
}

Category category_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kCategoryNames.size(); ++i) {
    if (name == kCategoryNames[i]) return static_cast<Category>(i);
  }
  throw InvalidArgument("unknown category '" + name + "'");
}

Category categorize(const PassDescriptor& descriptor,
                    const std::set<Stage>& stages_seen) {
  const std::string& m = descriptor.module;
  if (m == "synthesis") return Category::kGateSynthesis;
  if (m == "layout" || m == "routing") return Category::kQubitMapping;
  if (m == "optimization") return Category::kCircuitOptimization;
  if (m == "scheduling") return Category::kScheduling;
  const std::set<Stage>& stages =
      stages_seen.empty() ? descriptor.declared_stages : stages_seen;
  if (stages.size() != 1) return Category::kUncategorized;
  return category_of_stage(*stages.begin());
}

Category categorize(const std::string& pass_name,
                    const std::set<Stage>& stages_seen,
                    const PassRegistry& registry) {
  return categorize(registry.at(pass_name), stages_seen);
}

std::vector<PassAggregate> aggregate(const std::vector<RunRecord>& records,
                                     const PassRegistry& registry) {
  std::map<std::string, PassAggregate> by_name;
  for (const RunRecord& r : records) {
    if (r.run_id != records.front().run_id) {
      throw InvalidArgument("records mix run ids '" + records.front().run_id +
                            "' and '" + r.run_id + "'");
    }
    if (r.wall_time < 0) {
      throw InvalidArgument("negative wall time for " + r.pass_name);
    }
    PassAggregate& a = by_name[r.pass_name];
    a.pass_name = r.pass_name;
    a.cumulative_time += r.wall_time;
    ++a.invocation_count;
    a.stages_seen.insert(r.stage);
  }
  std::vector<PassAggregate> out;
  out.reserve(by_name.size());
  for (auto& [name, a] : by_name) {
    a.category = categorize(name, a.stages_seen, registry);
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<PassAggregate> top_n(std::vector<PassAggregate> aggregates,
                                 std::size_t n) {
  if (n == 0) throw InvalidArgument("top_n needs n >= 1");
  const auto by_cost = [](const PassAggregate& a, const PassAggregate& b) {
    if (a.cumulative_time != b.cumulative_time) {
      return a.cumulative_time > b.cumulative_time;
    }
    return a.pass_name < b.pass_name;
  };
  const std::size_t keep = std::min(n, aggregates.size());
  std::partial_sort(aggregates.begin(),
                    aggregates.begin() + static_cast<std::ptrdiff_t>(keep),
                    aggregates.end(), by_cost);
  aggregates.resize(keep);
  return aggregates;
}

double share_of_total(Nanoseconds part, Nanoseconds total) {
  if (total <= 0) {
    throw UndefinedShare("share of a non-positive total compile time");
  }
  return 100.0 * static_cast<double>(part) / static_cast<double>(total);
}

double quantile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) throw InvalidArgument("quantile of an empty sample");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument("quantile probability must lie in [0, 1]");
  }
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

FiveNumber five_number(std::vector<double> samples) {
  if (samples.empty()) throw InvalidArgument("five_number of an empty sample");
  std::sort(samples.begin(), samples.end());
  return {samples.front(), quantile(samples, 0.25), quantile(samples, 0.5),
          quantile(samples, 0.75), samples.back()};
}

ExperimentSummary summarize(const std::vector<RepetitionResult>& runs,
                            std::size_t top, double near_tie_threshold) {
  if (runs.empty()) throw InvalidArgument("summarize needs >= 1 repetition");
  for (const RepetitionResult& r : runs) {
    if (!(r.configuration == runs.front().configuration)) {
      throw InvalidArgument("repetitions have different configurations");
    }
  }

  struct Samples {
    std::vector<double> time;
    std::vector<double> share;
    std::vector<double> calls;
    std::optional<Category> category;
    bool mixed = false;
  };
  const std::size_t reps = runs.size();
  std::map<std::string, Samples> by_name;
  for (std::size_t i = 0; i < reps; ++i) {
    for (const PassAggregate& a : runs[i].aggregates) {
      Samples& s = by_name[a.pass_name];
      if (s.time.empty()) {
        s.time.assign(reps, 0.0);
        s.share.assign(reps, 0.0);
        s.calls.assign(reps, 0.0);
      }
      s.time[i] += static_cast<double>(a.cumulative_time);
      s.calls[i] += static_cast<double>(a.invocation_count);
      if (runs[i].total_time > 0) {
        s.share[i] += share_of_total(a.cumulative_time, runs[i].total_time);
      }
      if (s.category && *s.category != a.category) s.mixed = true;
      s.category = a.category;
    }
  }

  ExperimentSummary summary;
  summary.configuration = runs.front().configuration;
  summary.repetitions = reps;
  summary.near_tie_threshold = near_tie_threshold;
  for (auto& [name, s] : by_name) {
    PassSummary p;
    p.pass_name = name;
    p.category = s.mixed ? Category::kUncategorized : *s.category;
    p.time_ns = five_number(s.time);
    p.median_share = five_number(s.share).median;
    p.median_invocations = five_number(s.calls).median;
    summary.passes.push_back(std::move(p));
  }
  std::sort(summary.passes.begin(), summary.passes.end(),
            [](const PassSummary& a, const PassSummary& b) {
              return ranks_before(a.time_ns.median, a.pass_name,
                                  b.time_ns.median, b.pass_name);
            });
  for (std::size_t i = 0; i < summary.passes.size() && i < top; ++i) {
    summary.top.push_back(summary.passes[i].pass_name);
  }
  for (std::size_t i = 0; i + 1 < summary.passes.size(); ++i) {
    const double a = summary.passes[i].time_ns.median;
    const double b = summary.passes[i + 1].time_ns.median;
    const double diff = std::abs(a - b);
    if (diff == 0.0 || diff < near_tie_threshold * std::max(a, b)) {
      summary.near_ties.emplace_back(summary.passes[i].pass_name,
                                     summary.passes[i + 1].pass_name);
    }
  }

  std::vector<double> totals;
  totals.reserve(reps);
  for (const RepetitionResult& r : runs) {
    totals.push_back(static_cast<double>(r.total_time));
  }
  summary.total_time_ns = five_number(std::move(totals));
  return summary;
}

}  // namespace qprof
