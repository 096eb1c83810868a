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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qprof/circuit.hpp"
#include "qprof/errors.hpp"
#include "qprof/experiment.hpp"
#include "qprof/pass_manager.hpp"
#include "qprof/passes.hpp"
#include "qprof/report.hpp"
#include "qprof/sim.hpp"
#include "qprof/target.hpp"

namespace py = pybind11;
using namespace qprof;

namespace {

py::dict metrics_dict(const CircuitMetrics& m) {
  py::dict d;
  d["size"] = m.size;
  d["depth"] = m.depth;
  d["two_qubit_count"] = m.two_qubit_count;
  return d;
}

}  // namespace

PYBIND11_MODULE(_qprof, m) {
  m.doc() = "Bindings for the qprof transpiler and pass profiler.";

  py::register_exception<PassError>(m, "CompileError", PyExc_RuntimeError);
  py::register_exception<SimulationError>(m, "SimulationError",
                                          PyExc_RuntimeError);

  py::class_<Circuit>(m, "Circuit")
      .def_static("from_text", [](const std::string& s) {
        return parse_circuit(s);
      })
      .def("to_text", [](const Circuit& c) { return to_text(c); })
      .def_property_readonly("num_qubits", &Circuit::num_qubits)
      .def_property_readonly("name", &Circuit::name)
      .def("__len__", &Circuit::size)
      .def("metrics", [](const Circuit& c) { return metrics_dict(c.metrics()); })
      .def("gate_names",
           [](const Circuit& c) {
             std::vector<std::string> out;
             for (const auto& op : c.instructions())
               out.emplace_back(op.name());
             return out;
           })
      .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; });

  m.def("build_qft", &build_qft, py::arg("n"), py::arg("boxed") = false);
  m.def("build_ghz", &build_ghz, py::arg("n"));
  m.def("make_workload", &make_workload, py::arg("name"), py::arg("qubits"),
        py::arg("boxed") = false);

  py::class_<Layout>(m, "Layout")
      .def_readonly("virtual_to_physical", &Layout::virtual_to_physical)
      .def_readonly("output_permutation", &Layout::output_permutation)
      .def("final_positions", &Layout::final_positions);

  py::class_<Target>(m, "Target")
      .def_property_readonly("name", &Target::name)
      .def_property_readonly("num_qubits", &Target::num_qubits)
      .def_property_readonly("basis", &Target::basis)
      .def("coupled", &Target::coupled)
      .def("edges",
           [](const Target& t) {
             std::vector<std::pair<Qubit, Qubit>> out;
             for (const auto& [e, c] : t.edges()) out.push_back(e);
             return out;
           })
      .def("to_text", [](const Target& t) { return save_target(t); });

  m.def("resolve_target", &resolve_target, py::arg("spec"),
        "Target from 'line:N', 'grid:RxC', a file path or a shipped name.");
  m.def("line_target", &line_target);
  m.def("grid_target", &grid_target);

  m.def(
      "compile",
      [](const Circuit& c, int level, const Target& t) {
        const PassManager pm = build_preset(level, t);
        Recorder rec;
        PipelineResult r = pm.run(c, rec);
        py::dict out;
        out["circuit"] = std::move(r.circuit);
        out["layout"] = r.layout();
        out["records_csv"] = records_to_csv(rec.records());
        out["total_time_ns"] = r.total_time;
        return out;
      },
      py::arg("circuit"), py::arg("level"), py::arg("target"),
      "Compile with the preset pipeline for `level`.");

  m.def("describe_preset",
        [](int level, const Target& t) { return build_preset(level, t).describe(); });

  m.def(
      "profile",
      [](const std::string& circuit, std::size_t qubits, int level,
         const Target& t, std::size_t reps, bool boxed, std::size_t top,
         unsigned jobs) {
        ExperimentSpec spec;
        spec.circuit = circuit;
        spec.qubits = qubits;
        spec.level = level;
        spec.repetitions = reps;
        spec.boxed = boxed;
        spec.top = top;
        spec.jobs = jobs;
        ExperimentRun run;
        {
          py::gil_scoped_release release;
          run = run_experiment(spec, t);
        }
        py::dict out;
        out["summary_json"] = summary_to_json(run.summary);
        out["records_csv"] = records_to_csv(run.records);
        out["plot_data_csv"] = plot_data_to_csv(run.summary);
        out["compiled"] = std::move(run.compiled);
        out["layout"] = run.layout;
        return out;
      },
      py::arg("circuit"), py::arg("qubits"), py::arg("level"),
      py::arg("target"), py::arg("repetitions") = 30, py::arg("boxed") = false,
      py::arg("top") = 10, py::arg("jobs") = 1,
      "Run a profiling experiment and return its exports.");

  m.def(
      "check_equivalence",
      [](const Circuit& ref, const Circuit& compiled,
         const std::optional<Layout>& layout, double tol) {
        const EquivalenceReport r = check_equivalence(ref, compiled, layout, tol);
        py::dict out;
        out["equivalent"] = r.equivalent;
        out["max_deviation"] = r.max_deviation;
        out["first_failure"] = r.first_failure;
        return out;
      },
      py::arg("reference"), py::arg("compiled"), py::arg("layout") = py::none(),
      py::arg("tol") = 1e-8);
  m.def("high_level_synthesis", &high_level_synthesis);
}
