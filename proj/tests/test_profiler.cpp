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


#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "qprof/errors.hpp"
#include "qprof/pass_manager.hpp"
#include "qprof/passes.hpp"
#include "qprof/profiler.hpp"

using namespace qprof;

namespace {

RunRecord rec(std::string name, Stage stage, Nanoseconds t,
              std::string run = "r0", unsigned iteration = 0) {
  return {std::move(name), stage, iteration, t, std::nullopt, std::move(run)};
}

PassAggregate agg(std::string name, Nanoseconds t, std::size_t calls = 1) {
  PassAggregate a;
  a.pass_name = std::move(name);
  a.cumulative_time = t;
  a.invocation_count = calls;
  return a;
}

RepetitionResult rep(std::vector<PassAggregate> aggs, Nanoseconds total) {
  return {{"ghz", 3, 1, "line:3"}, std::move(aggs), total};
}

// Quantile found by scanning the grid k/(n-1) for the bracketing pair.
double grid_quantile(const std::vector<double>& s, double p) {
  if (s.size() == 1) return s[0];
  const double step = 1.0 / static_cast<double>(s.size() - 1);
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    const double lo = static_cast<double>(k) * step;
    const double hi = static_cast<double>(k + 1) * step;
    if (p <= hi + 1e-15) {
      const double w = (p - lo) / (hi - lo);
      return s[k] + w * (s[k + 1] - s[k]);
    }
  }
  return s.back();
}

}  // namespace

TEST_CASE("categorization rules", "[profiler]") {
  const PassRegistry& reg = PassRegistry::builtin();
  CHECK(categorize("VF2Layout", {Stage::kLayout}, reg) ==
        Category::kQubitMapping);
  CHECK(categorize("MinimumPoint", {Stage::kOptimization}, reg) ==
        Category::kCircuitOptimization);
  const PassDescriptor hypothetical{"Hypo", PassKind::kTransformation, "utils",
                                    {}};
  CHECK(categorize(hypothetical, {Stage::kLayout, Stage::kScheduling}) ==
        Category::kUncategorized);

  CHECK(categorize("SwapRoute", {Stage::kRouting}, reg) ==
        Category::kQubitMapping);
  CHECK(categorize("HighLevelSynthesis",
                   {Stage::kInitialization, Stage::kTranslation}, reg) ==
        Category::kGateSynthesis);
  CHECK(categorize("BasisTranslate", {Stage::kTranslation}, reg) ==
        Category::kGateSynthesis);
  CHECK(categorize("ASAPSchedule", {Stage::kScheduling}, reg) ==
        Category::kScheduling);
  CHECK(categorize("InverseCancellation", {Stage::kOptimization}, reg) ==
        Category::kCircuitOptimization);
  CHECK(categorize(hypothetical, {Stage::kRouting}) == Category::kQubitMapping);
  CHECK(categorize(hypothetical, {Stage::kInitialization}) ==
        Category::kUncategorized);
  // With no observed stages, the declared ones decide.
  CHECK(categorize("FixedPoint", {}, reg) == Category::kCircuitOptimization);
  CHECK_THROWS_AS(categorize("NoSuchPass", {Stage::kLayout}, reg), UnknownPass);

  for (Category c :
       {Category::kGateSynthesis, Category::kQubitMapping,
        Category::kCircuitOptimization, Category::kScheduling,
        Category::kUncategorized})
    CHECK(category_from_name(category_name(c)) == c);
  CHECK(std::string(category_name(Category::kQubitMapping)) == "qubit-mapping");
  CHECK_THROWS(category_from_name("bogus"));
}

TEST_CASE("aggregation sums across stages and iterations", "[profiler]") {
  const std::vector<RunRecord> records = {
      rec("HighLevelSynthesis", Stage::kInitialization, 10),
      rec("VF2Layout", Stage::kLayout, 100),
      rec("HighLevelSynthesis", Stage::kTranslation, 5),
      rec("InverseCancellation", Stage::kOptimization, 3, "r0", 1),
      rec("InverseCancellation", Stage::kOptimization, 4, "r0", 2),
      rec("FixedPoint", Stage::kOptimization, 1),
  };
  const auto aggs = aggregate(records);
  REQUIRE(aggs.size() == 4);
  CHECK(aggs[0].pass_name == "FixedPoint");
  CHECK(aggs[1].pass_name == "HighLevelSynthesis");
  CHECK(aggs[1].cumulative_time == 15);
  CHECK(aggs[1].invocation_count == 2);
  CHECK(aggs[1].stages_seen ==
        std::set<Stage>{Stage::kInitialization, Stage::kTranslation});
  CHECK(aggs[1].category == Category::kGateSynthesis);
  CHECK(aggs[2].cumulative_time == 7);
  CHECK(aggs[3].category == Category::kQubitMapping);

  CHECK(aggregate({}).empty());
  CHECK_THROWS_AS(aggregate({rec("VF2Layout", Stage::kLayout, 1, "a"),
                             rec("VF2Layout", Stage::kLayout, 1, "b")}),
                  InvalidArgument);
  CHECK_THROWS_AS(aggregate({rec("Mystery", Stage::kLayout, 1)}), UnknownPass);
}

TEST_CASE("aggregation conserves total time", "[profiler][oracle]") {
  std::mt19937 rng(53);
  const auto names = PassRegistry::builtin().names();
  std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
  std::uniform_int_distribution<int> stage(0, 5);
  std::uniform_int_distribution<Nanoseconds> time(0, 1'000'000);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<RunRecord> records;
    Nanoseconds total = 0;
    for (int i = 0; i < trial % 30; ++i) {
      records.push_back(
          rec(names[pick(rng)], static_cast<Stage>(stage(rng)), time(rng)));
      total += records.back().wall_time;
    }
    Nanoseconds sum = 0;
    std::size_t calls = 0;
    for (const auto& a : aggregate(records)) {
      sum += a.cumulative_time;
      calls += a.invocation_count;
    }
    CHECK(sum == total);
    CHECK(calls == records.size());
  }
}

TEST_CASE("top_n ranking", "[profiler]") {
  const auto ranked = top_n({agg("A", 5), agg("B", 9), agg("C", 9)});
  REQUIRE(ranked.size() == 3);
  CHECK(ranked[0].pass_name == "B");
  CHECK(ranked[1].pass_name == "C");
  CHECK(ranked[2].pass_name == "A");
  CHECK(top_n({agg("A", 5), agg("B", 9)}, 1).size() == 1);
  CHECK(top_n({}, 3).empty());
  CHECK_THROWS_AS(top_n({agg("A", 1)}, 0), InvalidArgument);
}

TEST_CASE("top_n equals a full sort", "[profiler][oracle]") {
  std::mt19937 rng(59);
  std::uniform_int_distribution<Nanoseconds> time(0, 20);  // many ties
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<PassAggregate> aggs;
    const std::size_t count = static_cast<std::size_t>(trial % 25);
    for (std::size_t i = 0; i < count; ++i)
      aggs.push_back(agg("p" + std::to_string(i), time(rng)));
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 12);
    auto full = aggs;
    std::stable_sort(full.begin(), full.end(), [](const auto& a, const auto& b) {
      if (a.cumulative_time != b.cumulative_time)
        return a.cumulative_time > b.cumulative_time;
      return a.pass_name < b.pass_name;
    });
    full.resize(std::min(n, full.size()));
    std::shuffle(aggs.begin(), aggs.end(), rng);
    CHECK(top_n(aggs, n) == full);
  }
}

TEST_CASE("share of total", "[profiler]") {
  CHECK(share_of_total(50, 100) == Catch::Approx(50.0));
  CHECK(share_of_total(agg("x", 995), 1000) == Catch::Approx(99.5));
  CHECK_THROWS_AS(share_of_total(1, 0), UndefinedShare);
  CHECK_THROWS_AS(share_of_total(1, -5), UndefinedShare);
}

TEST_CASE("quantiles and five-number summaries", "[profiler]") {
  const FiveNumber f = five_number({4, 2, 1, 3});
  CHECK(f.min == 1.0);
  CHECK(f.q1 == Catch::Approx(1.75));
  CHECK(f.median == Catch::Approx(2.5));
  CHECK(f.q3 == Catch::Approx(3.25));
  CHECK(f.max == 4.0);
  const FiveNumber one = five_number({7});
  CHECK((one.min == 7 && one.q1 == 7 && one.median == 7 && one.q3 == 7 &&
         one.max == 7));
  CHECK_THROWS_AS(five_number({}), InvalidArgument);

  std::mt19937 rng(61);
  std::uniform_real_distribution<double> v(-100, 100);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> s(1 + static_cast<std::size_t>(trial % 40));
    for (double& x : s) x = v(rng);
    std::sort(s.begin(), s.end());
    for (double p : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0})
      CHECK(quantile(s, p) == Catch::Approx(grid_quantile(s, p)).margin(1e-9));
  }
}

TEST_CASE("summaries over repetitions", "[profiler]") {
  std::vector<RepetitionResult> runs;
  for (Nanoseconds t : {1, 2, 3, 4})
    runs.push_back(rep({agg("VF2Layout", t)}, 10));
  const ExperimentSummary s = summarize(runs);
  REQUIRE(s.passes.size() == 1);
  const FiveNumber& f = s.passes[0].time_ns;
  CHECK(f == FiveNumber{1, 1.75, 2.5, 3.25, 4});
  CHECK(s.repetitions == 4);
  CHECK(s.passes[0].median_share == Catch::Approx(25.0));
  CHECK(s.passes[0].category == Category::kUncategorized);  // agg() default
  CHECK(s.total_time_ns.median == 10.0);
}

TEST_CASE("absent passes count as zero", "[profiler]") {
  std::vector<RepetitionResult> runs;
  for (int i = 0; i < 30; ++i) {
    std::vector<PassAggregate> aggs{agg("Always", 10)};
    if (i != 17) aggs.push_back(agg("Mostly", 5));
    runs.push_back(rep(aggs, 100));
  }
  const ExperimentSummary s = summarize(runs);
  REQUIRE(s.passes.size() == 2);
  CHECK(s.passes[0].pass_name == "Always");
  CHECK(s.passes[1].pass_name == "Mostly");
  CHECK(s.passes[1].time_ns.min == 0.0);
  CHECK(s.passes[1].time_ns.median == 5.0);
}

TEST_CASE("summary ranking, top list and near ties", "[profiler]") {
  std::vector<RepetitionResult> runs{
      rep({agg("A", 1000), agg("B", 995), agg("C", 10), agg("D", 10)}, 3000)};
  const ExperimentSummary s = summarize(runs, 2, 0.01);
  REQUIRE(s.passes.size() == 4);
  CHECK(s.top == std::vector<std::string>{"A", "B"});
  CHECK(s.near_ties == std::vector<std::pair<std::string, std::string>>{
                           {"A", "B"}, {"C", "D"}});
  CHECK(summarize(runs, 2, 0.001).near_ties ==
        std::vector<std::pair<std::string, std::string>>{{"C", "D"}});

  CHECK_THROWS_AS(summarize({}), InvalidArgument);
  auto other = runs[0];
  other.configuration.level = 2;
  CHECK_THROWS_AS(summarize({runs[0], other}), InvalidArgument);
}

TEST_CASE("summaries ignore repetition order", "[profiler][oracle]") {
  std::mt19937 rng(67);
  std::uniform_int_distribution<Nanoseconds> t(0, 1000);
  std::bernoulli_distribution present(0.8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<RepetitionResult> runs;
    for (int r = 0; r < 7; ++r) {
      std::vector<PassAggregate> aggs;
      for (const char* n : {"A", "B", "C", "D"})
        if (present(rng)) aggs.push_back(agg(n, t(rng), 1 + r % 3));
      runs.push_back(rep(aggs, 5000));
    }
    const ExperimentSummary base = summarize(runs);
    std::shuffle(runs.begin(), runs.end(), rng);
    CHECK(summarize(runs) == base);
  }
}

TEST_CASE("recorded time stays within the pipeline total", "[profiler]") {
  const Target t = grid_target(2, 3);
  for (int level = 0; level <= 3; ++level) {
    const PassManager pm = build_preset(level, t);
    for (int r = 0; r < 5; ++r) {
      Recorder recorder("rep-" + std::to_string(r));
      const PipelineResult res = pm.run(build_qft(6), recorder);
      Nanoseconds sum = 0;
      double shares = 0;
      for (const auto& a : aggregate(recorder.records())) {
        sum += a.cumulative_time;
        shares += share_of_total(a, res.total_time);
      }
      CHECK(sum <= res.total_time);
      CHECK(shares <= 100.0 + 1e-9);
    }
  }
}
