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

#include <numbers>

#include "oracles.hpp"
#include "qprof/errors.hpp"
#include "qprof/pass_manager.hpp"
#include "qprof/passes.hpp"
#include "qprof/sim.hpp"
#include "qprof/vf2.hpp"

using namespace qprof;

namespace {

constexpr double kPi = std::numbers::pi;

bool legal_on(const Circuit& c, const Target& t) {
  for (const auto& op : c.instructions()) {
    if (op.type != GateType::DELAY && !t.in_basis(op.name())) return false;
    if (op.qubits.size() == 2 && !t.coupled(op.qubits[0], op.qubits[1]))
      return false;
  }
  return true;
}

Circuit from_ops(std::size_t n, std::vector<Instruction> ops) {
  Circuit c(n);
  c.assign(std::move(ops));
  return c;
}

}  // namespace

// --- layout ----------------------------------------------------------------

TEST_CASE("trivial layout", "[layout]") {
  const Layout l = trivial_layout(build_ghz(3), line_target(5));
  CHECK(l.virtual_to_physical == std::vector<Qubit>{0, 1, 2});
  CHECK(l.num_physical() == 5);
  CHECK(l.final_positions() == l.virtual_to_physical);
  CHECK_THROWS_AS(trivial_layout(build_ghz(6), line_target(5)), CapacityError);
}

TEST_CASE("layout validation", "[layout]") {
  CHECK_THROWS_AS(Layout::from_mapping({0, 0}, 3), InvariantViolation);
  CHECK_THROWS_AS(Layout::from_mapping({0, 3}, 3), InvariantViolation);
  Layout l = Layout::from_mapping({2, 0}, 3);
  l.output_permutation = {1, 1, 0};
  CHECK_THROWS_AS(l.validate(), InvariantViolation);
  l.output_permutation = {1, 2, 0};
  CHECK(l.final_positions() == std::vector<Qubit>{0, 1});
}

TEST_CASE("vf2 layout on small shapes", "[layout][vf2]") {
  // A 3-qubit line interaction fits a 2x2 grid; a triangle does not.
  const Vf2Budget exhaustive{0, Vf2Scoring::kExhaustive};
  const auto line = vf2_layout(build_ghz(3), grid_target(2, 2), exhaustive);
  REQUIRE(line.layout);
  CHECK(line.states_visited > 0);
  Circuit tri(3);
  tri.append({Instruction::cx(0, 1), Instruction::cx(1, 2),
              Instruction::cx(2, 0)});
  CHECK_FALSE(vf2_layout(tri, grid_target(2, 2), exhaustive).layout);
  CHECK_FALSE(vf2_layout(build_ghz(6), line_target(5), exhaustive).layout);

  // The exhaustive search prefers the lowest-error edge, which on a line
  // is the one nearest qubit 0.
  Circuit pair(2);
  pair.append(Instruction::cx(0, 1));
  const auto best = vf2_layout(pair, line_target(6), exhaustive);
  REQUIRE(best.layout);
  std::vector<Qubit> phys = best.layout->virtual_to_physical;
  std::sort(phys.begin(), phys.end());
  CHECK(phys == std::vector<Qubit>{0, 1});
}

TEST_CASE("vf2 agrees with brute force", "[vf2][oracle]") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t pn = size(rng), hn = size(rng);
    const auto pe = oracle::random_graph(pn, 0.5, rng);
    const auto he = oracle::random_graph(hn, 0.6, rng);
    const UndirectedGraph p(pn, pe), h(hn, he);
    const Vf2Result r = find_monomorphism(p, h, {});
    CHECK(r.mapping.has_value() == oracle::monomorphism_exists(pn, pe, hn, he));
    if (r.mapping) {
      CHECK(is_monomorphism(p, h, *r.mapping));
    } else {
      CHECK(r.complete);  // a "no" answer must come from a full search
    }
  }
}

TEST_CASE("vf2 budget stops the search", "[vf2]") {
  // A 4-cycle never fits a line, but degrees alone do not rule it out, so
  // a tiny budget runs out before the search can prove it.
  const UndirectedGraph cycle(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  UndirectedGraph line(12);
  for (unsigned i = 0; i + 1 < 12; ++i) line.add_edge(i, i + 1);
  const Vf2Result r = find_monomorphism(cycle, line, {5, Vf2Scoring::kFirst});
  CHECK_FALSE(r.mapping);
  CHECK(r.states_visited <= 5);
  CHECK_FALSE(r.complete);
}

// --- routing ---------------------------------------------------------------

TEST_CASE("routing inserts swaps only when needed", "[routing]") {
  const Target t = line_target(3);
  const RoutingResult adjacent =
      swap_route(build_ghz(3), Layout::identity(3, 3), t);
  CHECK(adjacent.swaps_inserted == 0);
  CHECK(adjacent.circuit.size() == 3);

  Circuit far(3);
  far.append(Instruction::cx(0, 2));
  const RoutingResult r = swap_route(far, Layout::identity(3, 3), t);
  CHECK(r.swaps_inserted == 1);
  for (const auto& op : r.circuit.instructions())
    CHECK(t.coupled(op.qubits[0], op.qubits[1]));
  CHECK(check_equivalence(far, r.circuit, r.layout).equivalent);
}

TEST_CASE("routing errors", "[routing]") {
  CHECK_THROWS_AS(swap_route(build_ghz(3), Layout::identity(2, 3),
                             line_target(3)),
                  InvalidArgument);
  const Target split = make_target(4, {{0, 1}, {2, 3}});
  Circuit c(4);
  c.append(Instruction::cx(0, 3));
  CHECK_THROWS_AS(swap_route(c, Layout::identity(4, 4), split), RoutingError);
  CHECK_THROWS_AS(
      swap_route(build_qft(3, true), Layout::identity(3, 3), line_target(3)),
      RoutingError);
}

TEST_CASE("routed random circuits are coupled and equivalent",
          "[routing][oracle]") {
  std::mt19937 rng(29);
  const Target targets[] = {line_target(5), grid_target(2, 3)};
  for (int trial = 0; trial < 40; ++trial) {
    const Target& t = targets[trial % 2];
    const std::size_t n = 3 + trial % 3;
    const Circuit c = oracle::random_circuit(n, 25, rng);
    std::vector<Qubit> perm(t.num_qubits());
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    perm.resize(n);
    const RoutingResult r =
        swap_route(c, Layout::from_mapping(perm, t.num_qubits()), t);
    for (const auto& op : r.circuit.instructions())
      if (op.qubits.size() == 2) CHECK(t.coupled(op.qubits[0], op.qubits[1]));
    CHECK(r.layout.virtual_to_physical == perm);
    CHECK(check_equivalence(c, r.circuit, r.layout).equivalent);
  }
}

// --- synthesis and translation ---------------------------------------------

TEST_CASE("box synthesis matches the unrolled circuit", "[synthesis][oracle]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const Circuit boxed = build_qft(n, true);
    const Circuit flat = high_level_synthesis(boxed);
    CHECK(flat == build_qft(n));
    const oracle::Dense u = oracle::circuit_operator(flat);
    // The textbook circuit reads qubit 0 as the most significant bit, so
    // with qubit 0 as the LSB its entries are omega^(rev(j) rev(k)) / sqrt(N).
    const std::size_t dim = std::size_t{1} << n;
    auto rev = [n](std::size_t x) {
      std::size_t r = 0;
      for (std::size_t b = 0; b < n; ++b) r |= ((x >> b) & 1u) << (n - 1 - b);
      return r;
    };
    double worst = 0;
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        const double ang = 2 * kPi * static_cast<double>(rev(j) * rev(k)) /
                           static_cast<double>(dim);
        const oracle::C want =
            std::polar(1.0 / std::sqrt(static_cast<double>(dim)), ang);
        worst = std::max(worst, std::abs(u(j, k) - want));
      }
    CHECK(worst < 1e-10);
  }
  CHECK(high_level_synthesis(Circuit(2)) == Circuit(2));
  CHECK(high_level_synthesis(build_ghz(3)) == build_ghz(3));
  Circuit g(3);
  g.append(Instruction::box("ghz", {0, 1, 2}));
  CHECK(high_level_synthesis(g) == build_ghz(3));
  Circuit unknown(2);
  unknown.append(Instruction::box("mystery", {0, 1}));
  CHECK_THROWS_AS(high_level_synthesis(unknown), UnsupportedOperation);
}

TEST_CASE("basis translation preserves the operator", "[translation][oracle]") {
  const Target t = line_target(4);
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Circuit c = oracle::random_circuit(1 + trial % 4, 15, rng);
    const Circuit out = basis_translate(c, t);
    for (const auto& op : out.instructions()) CHECK(t.in_basis(op.name()));
    CHECK(oracle::same_up_to_phase(oracle::circuit_operator(c),
                                   oracle::circuit_operator(out), 1e-9));
  }
  CHECK_THROWS_AS(basis_translate(build_qft(2, true), t), TranslationError);
  const Target no_sx = parse_target("qubits 2\nbasis CX RZ\nedge 0 1\n");
  Circuit h(2);
  h.append(Instruction::h(0));
  CHECK_THROWS_AS(basis_translate(h, no_sx), TranslationError);
}

// --- optimization ----------------------------------------------------------

TEST_CASE("inverse cancellation examples", "[optimization]") {
  using I = Instruction;
  CHECK(inverse_cancellation(from_ops(1, {I::h(0), I::h(0)})).empty());
  CHECK(inverse_cancellation(from_ops(2, {I::cx(0, 1), I::cx(0, 1)})).empty());
  CHECK(inverse_cancellation(from_ops(2, {I::cx(0, 1), I::cx(1, 0)})).size() ==
        2);
  CHECK(inverse_cancellation(from_ops(2, {I::swap(0, 1), I::swap(1, 0)}))
            .empty());
  CHECK(inverse_cancellation(from_ops(1, {I::rz(0.4, 0), I::rz(-0.4, 0)}))
            .empty());
  CHECK(inverse_cancellation(from_ops(1, {I::rz(0.4, 0), I::rz(0.4, 0)}))
            .size() == 2);
  // Nested pairs collapse in one sweep.
  CHECK(inverse_cancellation(
            from_ops(2, {I::h(0), I::cx(0, 1), I::cx(0, 1), I::h(0)}))
            .empty());
  // A gate on a shared wire blocks cancellation.
  CHECK(inverse_cancellation(
            from_ops(2, {I::cx(0, 1), I::x(1), I::cx(0, 1)}))
            .size() == 3);
  CHECK(inverse_cancellation(from_ops(1, {I::sx(0), I::sx(0)})).size() == 2);
}

TEST_CASE("inverse cancellation matches exhaustive pair search",
          "[optimization][oracle]") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const Circuit c = oracle::random_circuit(1 + trial % 4, trial % 40, rng);
    const Circuit out = inverse_cancellation(c);
    CHECK(out.instructions() == oracle::cancel_by_search(c.instructions()));
    CHECK(out.size() <= c.size());
    CHECK(oracle::same_up_to_phase(oracle::circuit_operator(c),
                                   oracle::circuit_operator(out), 1e-9));
  }
}

TEST_CASE("single-qubit run resynthesis", "[optimization]") {
  using I = Instruction;
  CHECK(optimize_1q_gates(from_ops(1, {I::h(0), I::h(0)})).empty());
  const Circuit merged =
      optimize_1q_gates(from_ops(1, {I::rz(0.25, 0), I::rz(0.5, 0)}));
  REQUIRE(merged.size() == 1);
  CHECK(merged[0].type == GateType::RZ);
  CHECK(merged[0].angle == Catch::Approx(0.75));
  // [H, X] would need three native gates, so it is left alone.
  const Circuit hx = from_ops(1, {I::h(0), I::x(0)});
  CHECK(optimize_1q_gates(hx) == hx);
  // Two-qubit gates split runs.
  const Circuit split = from_ops(2, {I::x(0), I::cx(0, 1), I::x(0)});
  CHECK(optimize_1q_gates(split) == split);
}

TEST_CASE("single-qubit resynthesis never grows and keeps the operator",
          "[optimization][oracle]") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const Circuit c = oracle::random_circuit(1 + trial % 3, trial % 30, rng,
                                             trial % 2 == 0);
    const Circuit out = optimize_1q_gates(c);
    CHECK(out.size() <= c.size());
    CHECK(oracle::same_up_to_phase(oracle::circuit_operator(c),
                                   oracle::circuit_operator(out), 1e-9));
  }
}

// --- scheduling ------------------------------------------------------------

TEST_CASE("asap schedule matches earliest start times", "[scheduling][oracle]") {
  const Target t = line_target(4);
  std::mt19937 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const Circuit c =
        swap_route(basis_translate(oracle::random_circuit(4, 20, rng), t),
                   Layout::identity(4, 4), t)
            .circuit;
    const Circuit native = basis_translate(c, t);
    CHECK(legal_on(native, t));
    std::vector<std::int64_t> durations;
    for (const auto& op : native.instructions())
      durations.push_back(t.cost(op.name(), op.qubits)->duration);
    const auto want = oracle::earliest_starts(native, durations);
    const Schedule s = asap_schedule(native, t);
    REQUIRE(s.start_times.size() == s.circuit.size());
    std::vector<std::int64_t> got;
    for (std::size_t i = 0; i < s.circuit.size(); ++i)
      if (s.circuit[i].type != GateType::DELAY) got.push_back(s.start_times[i]);
    CHECK(got == want);
    std::int64_t end = 0;
    for (std::size_t i = 0; i < want.size(); ++i)
      end = std::max(end, want[i] + durations[i]);
    CHECK(s.total == end);
  }
  Circuit h(1);
  h.append(Instruction::h(0));
  CHECK_THROWS_AS(asap_schedule(h, t), SchedulingError);
}

TEST_CASE("asap pads idle wires with delays", "[scheduling]") {
  const Target t = line_target(2);
  Circuit c(2);
  c.append({Instruction::x(0), Instruction::cx(0, 1)});
  const Schedule s = asap_schedule(c, t);
  REQUIRE(s.circuit.size() == 3);
  CHECK(s.circuit[1].type == GateType::DELAY);
  CHECK(s.circuit[1].qubits == std::vector<Qubit>{1});
  CHECK(s.circuit[1].ticks == Target::kDefault1qDuration);
  CHECK(s.total == Target::kDefault1qDuration + Target::kDefault2qDuration);
}

// --- pass wrappers ---------------------------------------------------------

TEST_CASE("pass wrappers publish properties", "[passes]") {
  const Target t = line_target(4);
  Circuit c = build_ghz(3);
  PropertySet p2;
  dynamic_cast<const Pass&>(*make_vf2_layout({0, Vf2Scoring::kFirst}))
      .run_once(c, t, p2);
  CHECK(*p2.get<bool>(props::kVf2Found));
  CHECK(*p2.get<std::int64_t>(props::kVf2States) > 0);
  REQUIRE(p2.get<Layout>(props::kLayout));

  PropertySet p3;
  Circuit routed = build_ghz(3);
  CHECK_THROWS_AS(
      dynamic_cast<const Pass&>(*make_swap_route()).run_once(routed, t, p3),
      InvalidArgument);
  dynamic_cast<const Pass&>(*make_trivial_layout()).run_once(routed, t, p3);
  dynamic_cast<const Pass&>(*make_swap_route()).run_once(routed, t, p3);
  CHECK(routed.num_qubits() == 4);

  Circuit native = basis_translate(routed, t);
  dynamic_cast<const Pass&>(*make_asap_schedule()).run_once(native, t, p3);
  CHECK(p3.get<std::vector<std::int64_t>>(props::kScheduleStart));
  CHECK(*p3.get<std::int64_t>(props::kScheduleDuration) > 0);
}
