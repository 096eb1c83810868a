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

// qprof: compile a workload repeatedly with a preset pipeline and report
// where the compile time goes.
//
//   qprof profile --circuit ghz --qubits 100 --level 3 --target eagle-like
//   qprof compare-levels --circuit qft --qubits 8 --target line:8 --verify
//   qprof verify --circuit qft --qubits 7 --level 2 --target grid:2x4
//
// Exit codes: 0 success, 2 bad flags, 3 compile failure, 4 verification
// failure.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qprof/errors.hpp"
#include "qprof/experiment.hpp"
#include "qprof/pass_manager.hpp"
#include "qprof/passes.hpp"
#include "qprof/report.hpp"
#include "qprof/sim.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCompile = 3;
constexpr int kExitVerify = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Style {
  bool color = false;
  std::string bold(const std::string& s) const {
    return color ? "\033[1m" + s + "\033[0m" : s;
  }
  std::string red(const std::string& s) const {
    return color ? "\033[31m" + s + "\033[0m" : s;
  }
  std::string green(const std::string& s) const {
    return color ? "\033[32m" + s + "\033[0m" : s;
  }
};

Style detect_style() {
  const char* no_color = std::getenv("NO_COLOR");
  Style s;
  s.color = isatty(STDOUT_FILENO) && (no_color == nullptr || *no_color == 0);
  return s;
}

std::string human_time(double ns) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  if (ns >= 1e9) {
    os << ns / 1e9 << " s";
  } else if (ns >= 1e6) {
    os << ns / 1e6 << " ms";
  } else if (ns >= 1e3) {
    os << ns / 1e3 << " us";
  } else {
    os << std::setprecision(0) << ns << " ns";
  }
  return os.str();
}

struct Options {
  std::string circuit = "ghz";
  std::size_t qubits = 0;
  bool boxed = false;
  int level = 1;
  std::size_t reps = 30;
  bool quick = false;
  std::string target;
  std::string out = "qprof-out";
  bool deterministic = true;
  std::size_t top = 10;
  bool verify = false;
  unsigned jobs = 1;
  double near_tie = 0.01;
  double tol = 1e-8;
};

void add_workload_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--circuit", o.circuit, "Workload: qft or ghz")
      ->check(CLI::IsMember({"qft", "ghz"}));
  cmd->add_option("--qubits", o.qubits, "Number of qubits")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--boxed", o.boxed,
                "Start from one unexpanded BOX instead of gates");
  cmd->add_option("--target", o.target,
                  "Target: line:N, grid:RxC, a .target file, or a shipped "
                  "target name (default line:<qubits>)");
}

void add_level_flag(CLI::App* cmd, Options& o) {
  cmd->add_option("--level", o.level, "Optimization level")
      ->check(CLI::Validator(
          [](std::string& v) -> std::string {
            if (v == "0" || v == "1" || v == "2" || v == "3") return {};
            return "level must be one of 0, 1, 2, 3 (got " + v + ")";
          },
          "{0,1,2,3}"));
}

void add_run_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--reps", o.reps, "Repetitions per configuration")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--quick", o.quick, "Shorthand for --reps 3");
  cmd->add_option("--out", o.out, "Output directory");
  cmd->add_flag("--seedless-deterministic,!--no-seedless-deterministic",
                o.deterministic,
                "Deterministic compilation (the pipeline draws no random "
                "numbers, so this is always the case)");
  cmd->add_option("--top", o.top, "Rows in the ranking table")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--verify", o.verify,
                "Check equivalence of the compiled circuit (<= 10 qubits)");
  cmd->add_option("--jobs", o.jobs, "Worker threads for repetitions")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--near-tie", o.near_tie,
                  "Relative median gap below which ranks are flagged")
      ->check(CLI::Range(0.0, 1.0));
}

qprof::Target load_target(const Options& o) {
  const std::string spec =
      o.target.empty() ? "line:" + std::to_string(o.qubits) : o.target;
  try {
    qprof::Target t = qprof::resolve_target(spec);
    if (t.name().empty()) t.set_name(spec);
    return t;
  } catch (const std::exception& e) {
    throw UsageError("cannot load target '" + spec + "': " + e.what());
  }
}

qprof::ExperimentSpec make_spec(const Options& o, int level) {
  qprof::ExperimentSpec spec;
  spec.circuit = o.circuit;
  spec.qubits = o.qubits;
  spec.boxed = o.boxed;
  spec.level = level;
  spec.repetitions = o.quick ? 3 : o.reps;
  spec.jobs = o.jobs;
  spec.top = o.top;
  spec.near_tie_threshold = o.near_tie;
  return spec;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + path.string());
}

void print_table(const qprof::ExperimentSummary& s, std::size_t top,
                 const Style& style) {
  std::cout << style.bold("rank  pass                  category              "
                          "  median time   share")
            << '\n';
  for (std::size_t i = 0; i < s.passes.size() && i < top; ++i) {
    const qprof::PassSummary& p = s.passes[i];
    bool tied = false;
    for (const auto& [a, b] : s.near_ties) {
      tied = tied || a == p.pass_name || b == p.pass_name;
    }
    std::ostringstream share;
    share << std::fixed << std::setprecision(1) << p.median_share << '%';
    std::cout << std::setw(4) << i + 1 << "  " << std::left << std::setw(22)
              << p.pass_name << std::setw(22) << category_name(p.category)
              << std::right << std::setw(14) << human_time(p.time_ns.median)
              << std::setw(8) << share.str() << (tied ? "  ~" : "") << '\n';
  }
  std::cout << "total compile time (median of " << s.repetitions
            << "): " << human_time(s.total_time_ns.median) << '\n';
  if (!s.near_ties.empty()) {
    std::cout << "~ near tie: medians within "
              << s.near_tie_threshold * 100.0 << "% of a neighbour\n";
  }
}

// Returns "ok", "failed" or "skipped" and prints the outcome.
std::string verify_run(const qprof::ExperimentRun& run, double tol,
                       const Style& style) {
  if (run.input.num_qubits() > qprof::kMaxSweepQubits) {
    std::cout << "verification skipped: more than "
              << qprof::kMaxSweepQubits << " qubits\n";
    return "skipped";
  }
  const qprof::EquivalenceReport r =
      qprof::check_equivalence(qprof::high_level_synthesis(run.input),
                               run.compiled, run.layout, tol);
  if (r.equivalent) {
    std::cout << style.green("verification ok") << " (max deviation "
              << r.max_deviation << ")\n";
    return "ok";
  }
  std::cout << style.red("verification FAILED") << ": basis input "
            << *r.first_failure << ", max deviation " << r.max_deviation
            << '\n';
  return "failed";
}

int write_outputs(const qprof::ExperimentRun& run, const fs::path& dir) {
  fs::create_directories(dir);
  std::vector<qprof::PassAggregate> first;
  qprof::Nanoseconds first_total = 0;
  if (!run.repetitions.empty()) {
    first = run.repetitions.front().aggregates;
    first_total = run.repetitions.front().total_time;
  }
  write_file(dir / "records.csv", qprof::records_to_csv(run.records));
  write_file(dir / "summary.json", qprof::summary_to_json(run.summary));
  write_file(dir / "plot_data.csv", qprof::plot_data_to_csv(run.summary));
  write_file(dir / "trace.csv",
             qprof::trace_to_csv(qprof::make_trace(first, first_total)));
  write_file(dir / "compiled.qc", qprof::to_text(run.compiled));
  return kExitOk;
}

int cmd_profile(const Options& o, const Style& style) {
  const qprof::Target target = load_target(o);
  const qprof::ExperimentRun run =
      qprof::run_experiment(make_spec(o, o.level), target);
  std::cout << style.bold("qprof profile") << ": " << o.circuit
            << (o.boxed ? " (boxed)" : "") << ", " << o.qubits
            << " qubits, level " << o.level << ", target " << target.name()
            << '\n';
  print_table(run.summary, o.top, style);
  write_outputs(run, o.out);
  std::cout << "wrote records.csv, summary.json, plot_data.csv, trace.csv, "
               "compiled.qc to "
            << o.out << '\n';
  if (o.verify && verify_run(run, o.tol, style) == "failed") {
    return kExitVerify;
  }
  return kExitOk;
}

int cmd_compare_levels(const Options& o, const Style& style) {
  const qprof::Target target = load_target(o);
  std::vector<qprof::ComparisonRow> rows;
  bool failed = false;
  for (int level = 0; level <= 3; ++level) {
    const qprof::ExperimentRun run =
        qprof::run_experiment(make_spec(o, level), target);
    std::cout << style.bold("level " + std::to_string(level)) << '\n';
    print_table(run.summary, o.top, style);
    write_outputs(run, fs::path(o.out) / ("level-" + std::to_string(level)));
    std::string verdict = "skipped";
    if (o.verify) verdict = verify_run(run, o.tol, style);
    failed = failed || verdict == "failed";
    rows.push_back(qprof::comparison_row(run.summary, verdict));
  }
  const std::string csv = qprof::comparison_to_csv(rows);
  write_file(fs::path(o.out) / "comparison.csv", csv);
  std::cout << style.bold("comparison") << '\n' << csv;
  return failed ? kExitVerify : kExitOk;
}

int cmd_verify(const Options& o, const Style& style) {
  if (o.qubits > qprof::kMaxSweepQubits) {
    throw UsageError("size limit: verify supports at most " +
                     std::to_string(qprof::kMaxSweepQubits) +
                     " qubits, got " + std::to_string(o.qubits));
  }
  const qprof::Target target = load_target(o);
  qprof::ExperimentSpec spec = make_spec(o, o.level);
  spec.repetitions = 1;
  const qprof::ExperimentRun run = qprof::run_experiment(spec, target);
  std::cout << style.bold("qprof verify") << ": " << o.circuit << ", "
            << o.qubits << " qubits, level " << o.level << ", target "
            << target.name() << '\n';
  return verify_run(run, o.tol, style) == "ok" ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum circuit transpiler with per-pass profiling", "qprof"};
  app.require_subcommand(1);
  Options o;

  CLI::App* profile =
      app.add_subcommand("profile", "Profile one optimization level");
  add_workload_flags(profile, o);
  add_level_flag(profile, o);
  add_run_flags(profile, o);

  CLI::App* compare = app.add_subcommand(
      "compare-levels", "Profile levels 0 to 3 and compare them");
  add_workload_flags(compare, o);
  add_run_flags(compare, o);

  CLI::App* verify =
      app.add_subcommand("verify", "Compile once and check equivalence");
  add_workload_flags(verify, o);
  add_level_flag(verify, o);
  verify->add_option("--tol", o.tol, "Amplitude tolerance")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Style style = detect_style();
  try {
    if (profile->parsed()) return cmd_profile(o, style);
    if (compare->parsed()) return cmd_compare_levels(o, style);
    return cmd_verify(o, style);
  } catch (const UsageError& e) {
    std::cerr << "qprof: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qprof::PassError& e) {
    std::cerr << "qprof: compile failed in pass " << e.pass() << " (stage "
              << qprof::stage_name(e.stage()) << "): " << e.cause() << '\n';
    return kExitCompile;
  } catch (const qprof::InvalidSize& e) {
    std::cerr << "qprof: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qprof: " << e.what() << '\n';
    return 1;
  }
}
