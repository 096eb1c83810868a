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

#include "qprof/sim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "qprof/errors.hpp"
#include "qprof/gate_matrix.hpp"

namespace qprof {

namespace {

constexpr double kPhaseFloor = 1e-10;

// A gate with its matrix resolved once, so sweeps do not rebuild it per
// basis input.
struct Kernel {
  std::size_t arity = 0;  // 0 means identity
  Qubit a = 0;
  Qubit b = 0;
  Mat2 m1{};
  std::array<Complex, 16> m2{};
};

Kernel make_kernel(const Instruction& op) {
  Kernel k;
  if (op.type == GateType::BOX) {
    throw SimulationError("cannot simulate unexpanded BOX '" + op.label + "'");
  }
  if (op.type == GateType::DELAY) return k;
  if (auto m = one_qubit_matrix(op)) {
    k.arity = 1;
    k.a = op.qubits[0];
    k.m1 = *m;
    return k;
  }
  if (auto m = two_qubit_matrix(op)) {
    k.arity = 2;
    k.a = op.qubits[0];
    k.b = op.qubits[1];
    k.m2 = *m;
    return k;
  }
  throw SimulationError("no matrix for gate " + std::string(op.name()));
}

void apply_kernel(StateVector& s, const Kernel& k) {
  if (k.arity == 1) {
    const std::size_t bit = std::size_t{1} << k.a;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i & bit) continue;
      const Complex x0 = s[i];
      const Complex x1 = s[i | bit];
      s[i] = k.m1[0] * x0 + k.m1[1] * x1;
      s[i | bit] = k.m1[2] * x0 + k.m1[3] * x1;
    }
  } else if (k.arity == 2) {
    const std::size_t b0 = std::size_t{1} << k.a;
    const std::size_t b1 = std::size_t{1} << k.b;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i & (b0 | b1)) continue;
      const std::array<std::size_t, 4> idx{i, i | b0, i | b1, i | b0 | b1};
      std::array<Complex, 4> x;
      for (int r = 0; r < 4; ++r) x[r] = s[idx[r]];
      for (int r = 0; r < 4; ++r) {
        Complex acc = 0.0;
        for (int c = 0; c < 4; ++c) acc += k.m2[r * 4 + c] * x[c];
        s[idx[r]] = acc;
      }
    }
  }
}

std::vector<Kernel> compile_kernels(const Circuit& c, std::size_t limit) {
  if (c.num_qubits() > limit) {
    throw SimulationError("size limit: " + std::to_string(c.num_qubits()) +
                          " qubits exceeds " + std::to_string(limit));
  }
  std::vector<Kernel> out;
  out.reserve(c.size());
  for (const Instruction& op : c.instructions()) out.push_back(make_kernel(op));
  return out;
}

StateVector run_kernels(const std::vector<Kernel>& ks, std::size_t n,
                        std::uint64_t input) {
  StateVector s(std::size_t{1} << n, 0.0);
  if (input >= s.size()) {
    throw SimulationError("basis input " + std::to_string(input) +
                          " out of range");
  }
  s[input] = 1.0;
  for (const Kernel& k : ks) apply_kernel(s, k);
  return s;
}

// Moves bit v of x to bit positions[v].
std::uint64_t scatter_bits(std::uint64_t x, const std::vector<Qubit>& pos) {
  std::uint64_t y = 0;
  for (std::size_t v = 0; v < pos.size(); ++v) {
    if ((x >> v) & 1u) y |= std::uint64_t{1} << pos[v];
  }
  return y;
}

}  // namespace

void apply_instruction(StateVector& state, const Instruction& op) {
  apply_kernel(state, make_kernel(op));
}

StateVector simulate(const Circuit& c, std::uint64_t input) {
  return run_kernels(compile_kernels(c, kMaxSimQubits), c.num_qubits(), input);
}

Matrix unitary(const Circuit& c) {
  const std::vector<Kernel> ks = compile_kernels(c, kMaxUnitaryQubits);
  Matrix u;
  u.dim = std::size_t{1} << c.num_qubits();
  u.data.assign(u.dim * u.dim, 0.0);
  for (std::size_t col = 0; col < u.dim; ++col) {
    const StateVector s = run_kernels(ks, c.num_qubits(), col);
    for (std::size_t row = 0; row < u.dim; ++row) u(row, col) = s[row];
  }
  return u;
}

double phase_distance(const Matrix& a, const Matrix& b) {
  if (a.dim != b.dim) {
    throw InvalidArgument("matrix dimensions differ");
  }
  Complex phase = 1.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    if (std::abs(a.data[i]) > kPhaseFloor) {
      phase = b.data[i] / a.data[i];
      phase /= std::abs(phase);
      break;
    }
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    worst = std::max(worst, std::abs(b.data[i] - phase * a.data[i]));
  }
  return worst;
}

EquivalenceReport check_equivalence(const Circuit& reference,
                                    const Circuit& compiled,
                                    const std::optional<Layout>& layout,
                                    double tol) {
  const std::size_t n = reference.num_qubits();
  const std::size_t m = compiled.num_qubits();
  if (n > kMaxSweepQubits) {
    throw SimulationError("size limit: basis sweep supports at most " +
                          std::to_string(kMaxSweepQubits) + " qubits, got " +
                          std::to_string(n));
  }
  std::vector<Qubit> initial;
  std::vector<Qubit> final_pos;
  if (layout) {
    layout->validate();
    if (layout->num_virtual() != n || layout->num_physical() != m) {
      throw InvalidArgument("layout shape does not match the circuits");
    }
    initial = layout->virtual_to_physical;
    final_pos = layout->final_positions();
  } else {
    if (n != m) {
      throw InvalidArgument("qubit counts differ and no layout was given");
    }
    for (std::size_t q = 0; q < n; ++q) initial.push_back(static_cast<Qubit>(q));
    final_pos = initial;
  }

  const std::vector<Kernel> ref_k = compile_kernels(reference, kMaxSimQubits);
  const std::vector<Kernel> out_k = compile_kernels(compiled, kMaxSimQubits);

  EquivalenceReport report;
  std::optional<Complex> phase;
  const std::size_t inputs = std::size_t{1} << n;
  std::vector<bool> in_image(std::size_t{1} << m);
  for (std::uint64_t x = 0; x < inputs; ++x) {
    const StateVector want = run_kernels(ref_k, n, x);
    const StateVector got = run_kernels(out_k, m, scatter_bits(x, initial));
    if (!phase) {
      for (std::size_t y = 0; y < want.size(); ++y) {
        if (std::abs(want[y]) > kPhaseFloor) {
          const Complex ratio = got[scatter_bits(y, final_pos)] / want[y];
          phase = std::abs(ratio) > kPhaseFloor ? ratio / std::abs(ratio)
                                                : Complex(1.0);
          break;
        }
      }
    }
    double worst = 0.0;
    std::fill(in_image.begin(), in_image.end(), false);
    for (std::size_t y = 0; y < want.size(); ++y) {
      const std::uint64_t z = scatter_bits(y, final_pos);
      in_image[z] = true;
      worst = std::max(worst, std::abs(got[z] - *phase * want[y]));
    }
    // Anything leaking outside the image (ancillas not back at |0>) counts.
    for (std::size_t z = 0; z < got.size(); ++z) {
      if (!in_image[z]) worst = std::max(worst, std::abs(got[z]));
    }
    report.max_deviation = std::max(report.max_deviation, worst);
    if (worst > tol && !report.first_failure) report.first_failure = x;
  }
  report.equivalent = !report.first_failure.has_value();
  return report;
}

}  // namespace qprof
