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

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "qprof/circuit.hpp"

namespace qprof {

using Complex = std::complex<double>;

/// Row-major 2x2 matrix: {m00, m01, m10, m11}.
using Mat2 = std::array<Complex, 4>;

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 identity2();

/// Matrix of a one-qubit gate (DELAY is the identity); nullopt otherwise.
std::optional<Mat2> one_qubit_matrix(const Instruction& op);

/// Row-major 4x4 matrix of a two-qubit gate, in the basis |q1 q0> where
/// q0 = op.qubits[0] is the low bit.
std::optional<std::array<Complex, 16>> two_qubit_matrix(const Instruction& op);

/// Euler angles with U = e^{i phase} RZ(phi) RY(theta) RZ(lambda).
struct ZyzAngles {
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;
  double phase = 0.0;
};

ZyzAngles zyz_angles(const Mat2& u);

/// Wraps into (-pi, pi].
double normalize_angle(double angle);

/// Shortest RZ/SX/X sequence (at most RZ SX RZ SX RZ) equal to `u` up to
/// global phase, in circuit order. RZ angles within 1e-12 of 0 mod 2*pi are
/// dropped; a near-identity `u` gives an empty sequence.
std::vector<Instruction> synthesize_zsx(const Mat2& u, Qubit q);

}  // namespace qprof
