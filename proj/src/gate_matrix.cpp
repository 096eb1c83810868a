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

#include "qprof/gate_matrix.hpp"

#include <cmath>
#include <numbers>

namespace qprof {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleTol = 1e-12;

Complex expi(double a) { return std::polar(1.0, a); }

bool is_zero_angle(double a) {
  return std::abs(normalize_angle(a)) < kAngleTol;
}

void push_rz(std::vector<Instruction>& out, double angle, Qubit q) {
  if (!is_zero_angle(angle)) {
    out.push_back(Instruction::rz(normalize_angle(angle), q));
  }
}

}  // namespace

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 identity2() { return {1.0, 0.0, 0.0, 1.0}; }

std::optional<Mat2> one_qubit_matrix(const Instruction& op) {
  const double r = 1.0 / std::numbers::sqrt2;
  switch (op.type) {
    case GateType::H:
      return Mat2{r, r, r, -r};
    case GateType::X:
      return Mat2{0.0, 1.0, 1.0, 0.0};
    case GateType::SX:
      return Mat2{Complex(0.5, 0.5), Complex(0.5, -0.5), Complex(0.5, -0.5),
                  Complex(0.5, 0.5)};
    case GateType::RZ:
      return Mat2{expi(-op.angle / 2), 0.0, 0.0, expi(op.angle / 2)};
    case GateType::DELAY:
      return identity2();
    default:
      return std::nullopt;
  }
}

std::optional<std::array<Complex, 16>> two_qubit_matrix(const Instruction& op) {
  std::array<Complex, 16> m{};
  // Index bit 0 is op.qubits[0], bit 1 is op.qubits[1].
  auto set = [&m](int row, int col, Complex v) { m[row * 4 + col] = v; };
  switch (op.type) {
    case GateType::CX:
      // control = bit 0, target = bit 1
      set(0, 0, 1.0);
      set(2, 2, 1.0);
      set(3, 1, 1.0);
      set(1, 3, 1.0);
      return m;
    case GateType::CP:
      set(0, 0, 1.0);
      set(1, 1, 1.0);
      set(2, 2, 1.0);
      set(3, 3, expi(op.angle));
      return m;
    case GateType::SWAP:
      set(0, 0, 1.0);
      set(1, 2, 1.0);
      set(2, 1, 1.0);
      set(3, 3, 1.0);
      return m;
    default:
      return std::nullopt;
  }
}

double normalize_angle(double angle) {
  double a = std::remainder(angle, 2 * kPi);  // [-pi, pi]
  if (a <= -kPi) a += 2 * kPi;
  return a;
}

ZyzAngles zyz_angles(const Mat2& u) {
  // Scale to SU(2): V = U / sqrt(det U).
  const Complex det = u[0] * u[3] - u[1] * u[2];
  const Complex s = std::sqrt(det);
  const Mat2 v{u[0] / s, u[1] / s, u[2] / s, u[3] / s};
  ZyzAngles out;
  out.theta = 2.0 * std::atan2(std::abs(v[2]), std::abs(v[0]));
  const double sum = 2.0 * std::arg(v[3]);   // phi + lambda
  const double diff = 2.0 * std::arg(v[2]);  // phi - lambda
  if (std::abs(v[2]) < kAngleTol) {
    out.phi = sum;
    out.lambda = 0.0;
  } else if (std::abs(v[0]) < kAngleTol) {
    out.phi = diff;
    out.lambda = 0.0;
  } else {
    out.phi = (sum + diff) / 2.0;
    out.lambda = (sum - diff) / 2.0;
  }
  out.phase = std::arg(s);
  return out;
}

std::vector<Instruction> synthesize_zsx(const Mat2& u, Qubit q) {
  const ZyzAngles a = zyz_angles(u);
  std::vector<Instruction> out;
  if (std::abs(a.theta) < kAngleTol) {
    push_rz(out, a.phi + a.lambda, q);
  } else if (std::abs(a.theta - kPi / 2) < kAngleTol) {
    push_rz(out, a.lambda - kPi / 2, q);
    out.push_back(Instruction::sx(q));
    push_rz(out, a.phi + kPi / 2, q);
  } else if (std::abs(a.theta - kPi) < kAngleTol) {
    push_rz(out, a.lambda - a.phi + kPi, q);
    out.push_back(Instruction::x(q));
  } else {
    push_rz(out, a.lambda, q);
    out.push_back(Instruction::sx(q));
    push_rz(out, a.theta + kPi, q);
    out.push_back(Instruction::sx(q));
    push_rz(out, a.phi + kPi, q);
  }
  return out;
}

}  // namespace qprof
