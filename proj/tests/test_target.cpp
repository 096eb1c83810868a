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

#include <filesystem>
#include <fstream>

#include "qprof/errors.hpp"
#include "qprof/target.hpp"

using namespace qprof;

TEST_CASE("line and grid shapes", "[target]") {
  const Target line = line_target(5);
  CHECK(line.num_qubits() == 5);
  CHECK(line.edges().size() == 4);
  CHECK(line.coupled(1, 2));
  CHECK(line.coupled(2, 1));
  CHECK_FALSE(line.coupled(0, 2));
  CHECK(line.connected());
  CHECK(line_target(1).edges().empty());

  const Target grid = grid_target(3, 4);
  CHECK(grid.num_qubits() == 12);
  CHECK(grid.edges().size() == 17);  // 3*3 horizontal + 2*4 vertical
  CHECK(grid.coupled(0, 4));
  CHECK_FALSE(grid.coupled(3, 4));  // row wrap is not an edge
  CHECK(grid.degree(5) == 4);

  CHECK_THROWS_AS(line_target(0), InvalidSize);
  CHECK_THROWS_AS(grid_target(0, 3), InvalidSize);
}

TEST_CASE("costs and basis", "[target]") {
  const Target t = line_target(3);
  CHECK(t.basis() == default_basis());
  CHECK(t.in_basis("CX"));
  CHECK_FALSE(t.in_basis("H"));
  REQUIRE(t.cost("CX", {0, 1}));
  CHECK(t.cost("CX", {1, 0})->duration == Target::kDefault2qDuration);
  CHECK_FALSE(t.cost("CX", {0, 2}));
  REQUIRE(t.cost("SX", {2}));
  CHECK_FALSE(t.cost("H", {2}));
  CHECK(t.edge_error(0, 2) == 1.0);
  CHECK(t.edge_error(0, 1) < t.edge_error(1, 2));
}

TEST_CASE("target file parsing", "[target][io]") {
  const Target t = parse_target(
      "# tiny\nqubits 3\nbasis CX RZ SX X\nedge 0 1 300 0.01\nedge 1 2\n"
      "gate1q SX 20 0.0002\n",
      "tiny");
  CHECK(t.name() == "tiny");
  CHECK(t.edges().size() == 2);
  CHECK(t.cost("CX", {0, 1})->duration == 300);
  CHECK(t.cost("CX", {0, 1})->error == Catch::Approx(0.01));
  CHECK(t.cost("SX", {0})->duration == 20);
  // RZ and X have no gate1q line and fall back to the default cost.
  CHECK(t.cost("RZ", {0})->duration == Target::kDefault1qDuration);

  CHECK_THROWS_AS(parse_target("basis CX\n"), ParseError);
  CHECK_THROWS_AS(parse_target("qubits 2\nedge 0 1\nedge 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_target("qubits 2\nfrobnicate\n"), ParseError);
  CHECK_THROWS_AS(parse_target("qubits 2\nedge 0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_target("qubits 2\nedge 0 0\n"), InvariantViolation);
  CHECK_THROWS_AS(parse_target("qubits 2\nedge 0 5\n"), InvariantViolation);
  CHECK_THROWS_AS(parse_target("qubits 2\nedge 0 1 10 1.5\n"),
                  InvariantViolation);
  CHECK_THROWS_AS(parse_target("qubits 2\nbasis CX FOO\n"), InvariantViolation);

  try {
    parse_target("qubits 2\n\nedge 0 1\nedge 1 nope\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("save and load round trip", "[target][io]") {
  for (const Target& t : {line_target(4), grid_target(2, 3)}) {
    const Target back = parse_target(save_target(t), t.name());
    CHECK(back.num_qubits() == t.num_qubits());
    CHECK(back.basis() == t.basis());
    CHECK(back.edges().size() == t.edges().size());
    for (const auto& [e, c] : t.edges()) {
      REQUIRE(back.edges().count(e) == 1);
      CHECK(back.edges().at(e).duration == c.duration);
      CHECK(back.edges().at(e).error == c.error);
    }
    CHECK(save_target(back) == save_target(t));
  }

  const auto path = std::filesystem::temp_directory_path() / "qprof_rt.target";
  {
    std::ofstream out(path);
    out << save_target(line_target(3));
  }
  CHECK(load_target(path).name() == "qprof_rt");
  std::filesystem::remove(path);
  CHECK_THROWS(load_target("/nonexistent/none.target"));
}

TEST_CASE("target specs", "[target]") {
  CHECK(resolve_target("line:7").num_qubits() == 7);
  CHECK(resolve_target("grid:2x4").edges().size() == 10);
  CHECK_THROWS_AS(resolve_target("grid:24"), InvalidArgument);
  CHECK_THROWS(resolve_target("line:abc"));
}

TEST_CASE("shipped heavy-hex target", "[target]") {
  const Target t = resolve_target("eagle-like");
  CHECK(t.num_qubits() == 127);
  CHECK(t.edges().size() == 144);
  CHECK(t.connected());
  for (Qubit q = 0; q < t.num_qubits(); ++q) CHECK(t.degree(q) <= 3);
  CHECK(t.basis() == default_basis());
}
