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

#include "qprof/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "qprof/errors.hpp"

namespace qprof {

Circuit make_workload(const std::string& name, std::size_t qubits,
                      bool boxed) {
  if (name == "qft") return build_qft(qubits, boxed);
  if (name == "ghz") {
    if (!boxed) return build_ghz(qubits);
    if (qubits == 0) throw InvalidSize("ghz needs at least one qubit");
    Circuit c(qubits, "ghz");
    std::vector<Qubit> all(qubits);
    for (std::size_t q = 0; q < qubits; ++q) all[q] = static_cast<Qubit>(q);
    c.append(Instruction::box("ghz", std::move(all)));
    return c;
  }
  throw InvalidArgument("unknown circuit '" + name + "' (expected qft or ghz)");
}

namespace {

struct RepetitionOutput {
  std::vector<RunRecord> records;
  RepetitionResult result;
  PipelineResult pipeline;
};

RepetitionOutput run_one(const PassManager& pm, const Circuit& input,
                         const Configuration& config, std::size_t index) {
  RepetitionOutput out;
  Recorder recorder("rep-" + std::to_string(index));
  out.pipeline = pm.run(input, recorder);
  out.records = std::move(recorder).take();
  out.result.configuration = config;
  out.result.aggregates = aggregate(out.records, pm.registry());
  out.result.total_time = out.pipeline.total_time;
  return out;
}

}  // namespace

ExperimentRun run_experiment(const ExperimentSpec& spec, const Target& target) {
  if (spec.repetitions == 0) {
    throw InvalidArgument("repetitions must be at least 1");
  }
  ExperimentRun run;
  run.input = make_workload(spec.circuit, spec.qubits, spec.boxed);
  const Configuration config{spec.circuit, spec.qubits, spec.level,
                             target.name()};

  std::vector<std::optional<RepetitionOutput>> outputs(spec.repetitions);
  const unsigned workers = static_cast<unsigned>(
      std::clamp<std::size_t>(spec.jobs, 1, spec.repetitions));
  if (workers == 1) {
    const PassManager pm = build_preset(spec.level, target, spec.preset);
    for (std::size_t i = 0; i < spec.repetitions; ++i) {
      outputs[i] = run_one(pm, run.input, config, i);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          const PassManager pm = build_preset(spec.level, target, spec.preset);
          for (std::size_t i = next++; i < spec.repetitions; i = next++) {
            outputs[i] = run_one(pm, run.input, config, i);
          }
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  // Merge in run-id order regardless of which worker finished first.
  for (std::size_t i = 0; i < spec.repetitions; ++i) {
    RepetitionOutput& o = *outputs[i];
    run.records.insert(run.records.end(), o.records.begin(), o.records.end());
    run.repetitions.push_back(std::move(o.result));
  }
  run.compiled = outputs.front()->pipeline.circuit;
  run.layout = outputs.front()->pipeline.layout();
  run.summary =
      summarize(run.repetitions, spec.top, spec.near_tie_threshold);
  return run;
}

}  // namespace qprof
