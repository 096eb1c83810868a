# Copyright 2026 The qprof Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Quantum-circuit transpiler with per-pass profiling."""

import json

from ._qprof import (
    Circuit,
    CompileError,
    Layout,
    SimulationError,
    Target,
    build_ghz,
    build_qft,
    check_equivalence,
    compile,
    describe_preset,
    grid_target,
    high_level_synthesis,
    line_target,
    make_workload,
    resolve_target,
)
from ._qprof import profile as _profile

__all__ = [
    "Circuit",
    "CompileError",
    "Layout",
    "SimulationError",
    "Target",
    "build_ghz",
    "build_qft",
    "check_equivalence",
    "compile",
    "describe_preset",
    "grid_target",
    "high_level_synthesis",
    "line_target",
    "make_workload",
    "profile",
    "resolve_target",
]


def profile(circuit, qubits, level, target, repetitions=30, boxed=False,
            top=10, jobs=1):
    """Profile a workload; the summary comes back parsed."""
    if isinstance(target, str):
        target = resolve_target(target)
    out = _profile(circuit, qubits, level, target, repetitions, boxed, top,
                   jobs)
    out["summary"] = json.loads(out.pop("summary_json"))
    return out
