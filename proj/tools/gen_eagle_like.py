#!/usr/bin/env python3
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
"""Writes data/eagle-like.target, a 127-qubit heavy-hex coupling graph.

The layout follows the public heavy-hex pattern of 127-qubit devices: seven
rows of data qubits joined by four bridge qubits between each pair of rows.
It is a plausible stand-in, not a calibrated device description, so edges
carry the default synthetic costs.

Usage: gen_eagle_like.py [OUTPUT]
"""

import collections
import pathlib
import sys

ROWS = [(0, 13), (18, 32), (37, 51), (56, 70), (75, 89), (94, 108), (113, 126)]
# (first bridge qubit, upper-row attachments, lower-row attachments)
BRIDGES = [
    (14, [0, 4, 8, 12], [18, 22, 26, 30]),
    (33, [20, 24, 28, 32], [39, 43, 47, 51]),
    (52, [37, 41, 45, 49], [56, 60, 64, 68]),
    (71, [58, 62, 66, 70], [77, 81, 85, 89]),
    (90, [75, 79, 83, 87], [94, 98, 102, 106]),
    (109, [96, 100, 104, 108], [114, 118, 122, 126]),
]
NUM_QUBITS = 127


def edges():
    out = []
    for lo, hi in ROWS:
        out.extend((q, q + 1) for q in range(lo, hi))
    for first, upper, lower in BRIDGES:
        for i, (u, l) in enumerate(zip(upper, lower)):
            b = first + i
            out.append((min(u, b), max(u, b)))
            out.append((min(l, b), max(l, b)))
    return sorted(out)


def check(es):
    assert len(set(es)) == len(es), "duplicate edge"
    degree = collections.Counter()
    adj = collections.defaultdict(set)
    for a, b in es:
        assert 0 <= a < b < NUM_QUBITS
        degree[a] += 1
        degree[b] += 1
        adj[a].add(b)
        adj[b].add(a)
    assert max(degree.values()) <= 3, "degree bound violated"
    seen, stack = {0}, [0]
    while stack:
        for n in adj[stack.pop()]:
            if n not in seen:
                seen.add(n)
                stack.append(n)
    assert len(seen) == NUM_QUBITS, "graph is not connected"
    return max(degree.values())


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else
                       pathlib.Path(__file__).resolve().parent.parent /
                       "data" / "eagle-like.target")
    es = edges()
    max_degree = check(es)
    lines = [
        "# eagle-like: 127-qubit heavy-hex coupling graph.",
        "# Generated by tools/gen_eagle_like.py. Not a device calibration;",
        "# durations and errors are the default synthetic values.",
        f"# {len(es)} edges, max degree {max_degree}, connected.",
        f"qubits {NUM_QUBITS}",
        "basis CX RZ SX X",
    ]
    lines += [f"edge {a} {b}" for a, b in es]
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out}: {NUM_QUBITS} qubits, {len(es)} edges")


if __name__ == "__main__":
    main()
