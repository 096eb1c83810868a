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

#include <algorithm>

#include "qprof/errors.hpp"
#include "qprof/passes.hpp"

namespace qprof {

Schedule asap_schedule(const Circuit& circuit, const Target& target) {
  Schedule s;
  std::vector<Ticks> available(circuit.num_qubits(), 0);
  std::vector<Instruction> out;
  out.reserve(circuit.size());
  for (const Instruction& op : circuit.instructions()) {
    Ticks duration = 0;
    if (op.type == GateType::DELAY) {
      duration = op.ticks;
    } else if (auto cost = target.cost(op.name(), op.qubits)) {
      duration = cost->duration;
    } else {
      std::string where;
      for (Qubit q : op.qubits) where += " q" + std::to_string(q);
      throw SchedulingError("no duration for " + std::string(op.name()) +
                            " on" + where);
    }
    Ticks start = 0;
    for (Qubit q : op.qubits) start = std::max(start, available[q]);
    for (Qubit q : op.qubits) {
      if (available[q] < start) {
        out.push_back(Instruction::delay(start - available[q], q));
        s.start_times.push_back(available[q]);
      }
      available[q] = start + duration;
    }
    out.push_back(op);
    s.start_times.push_back(start);
    s.total = std::max(s.total, start + duration);
  }
  s.circuit = Circuit(circuit.num_qubits(), circuit.name());
  s.circuit.assign(std::move(out));
  return s;
}

}  // namespace qprof
