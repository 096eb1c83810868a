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

import csv
import io

import pytest

import qprof


def test_generators():
    assert len(qprof.build_qft(3)) == 7
    assert qprof.build_ghz(3).gate_names() == ["H", "CX", "CX"]
    assert len(qprof.build_qft(5, boxed=True)) == 1
    with pytest.raises(ValueError):
        qprof.build_ghz(0)


def test_text_round_trip():
    c = qprof.build_qft(4)
    assert qprof.Circuit.from_text(c.to_text()) == c


def test_targets():
    assert len(qprof.resolve_target("grid:3x4").edges()) == 17
    eagle = qprof.resolve_target("eagle-like")
    assert eagle.num_qubits == 127
    with pytest.raises(ValueError):
        qprof.resolve_target("grid:34")


def test_compile_is_legal_and_equivalent():
    target = qprof.resolve_target("line:5")
    circuit = qprof.build_qft(5)
    for level in range(4):
        out = qprof.compile(circuit, level, target)
        compiled = out["circuit"]
        assert set(compiled.gate_names()) <= target.basis | {"DELAY"}
        report = qprof.check_equivalence(circuit, compiled, out["layout"])
        assert report["equivalent"], report
        assert out["records_csv"].startswith("run_id,stage,pass_name")


def test_profile_summary():
    out = qprof.profile("ghz", 4, 3, "line:4", repetitions=3)
    summary = out["summary"]
    assert summary["repetitions"] == 3
    names = [p["pass_name"] for p in summary["passes"]]
    assert "MinimumPoint" in names
    rows = list(csv.DictReader(io.StringIO(out["plot_data_csv"])))
    assert [r["pass_name"] for r in rows] == names


def test_compile_error():
    with pytest.raises(qprof.CompileError):
        qprof.compile(qprof.build_ghz(6), 1, qprof.line_target(4))


def test_equivalence_size_limit():
    c = qprof.build_ghz(11)
    with pytest.raises(qprof.SimulationError):
        qprof.check_equivalence(c, c)
