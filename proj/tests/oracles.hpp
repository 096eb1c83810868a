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

// Reference implementations used to check the library. They are written
// from the textbook definitions and deliberately share no code with src/:
// gate matrices are spelled out here, operators are built by explicit
// Kronecker products, graph questions are answered by enumeration.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qprof/circuit.hpp"

namespace oracle {

using C = std::complex<double>;
inline const double kPi = std::acos(-1.0);

/// Dense row-major square matrix.
struct Dense {
  std::size_t dim = 0;
  std::vector<C> a;

  explicit Dense(std::size_t d = 0) : dim(d), a(d * d, 0.0) {}
  C& operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  C operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }

  static Dense eye(std::size_t d) {
    Dense m(d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
  }
};

inline Dense matmul(const Dense& x, const Dense& y) {
  Dense z(x.dim);
  for (std::size_t i = 0; i < x.dim; ++i) {
    for (std::size_t k = 0; k < x.dim; ++k) {
      if (x(i, k) == C(0.0)) continue;
      for (std::size_t j = 0; j < x.dim; ++j) z(i, j) += x(i, k) * y(k, j);
    }
  }
  return z;
}

inline Dense kron(const Dense& x, const Dense& y) {
  Dense z(x.dim * y.dim);
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t j = 0; j < x.dim; ++j)
      for (std::size_t k = 0; k < y.dim; ++k)
        for (std::size_t l = 0; l < y.dim; ++l)
          z(i * y.dim + k, j * y.dim + l) = x(i, j) * y(k, l);
  return z;
}

inline Dense mat2(C a, C b, C c, C d) {
  Dense m(2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

/// Textbook single-qubit matrices.
inline Dense gate_h() {
  const double s = 1.0 / std::sqrt(2.0);
  return mat2(s, s, s, -s);
}
inline Dense gate_x() { return mat2(0.0, 1.0, 1.0, 0.0); }
inline Dense gate_sx() {
  return mat2(C(0.5, 0.5), C(0.5, -0.5), C(0.5, -0.5), C(0.5, 0.5));
}
inline Dense gate_rz(double t) {
  return mat2(std::polar(1.0, -t / 2), 0.0, 0.0, std::polar(1.0, t / 2));
}

/// Operator of a one-qubit gate on qubit q of an n-qubit register, with
/// qubit 0 the least significant bit: I (x) ... (x) U (x) ... (x) I where
/// the leftmost factor is qubit n-1.
inline Dense embed1(const Dense& u, std::size_t q, std::size_t n) {
  Dense out = Dense::eye(1);
  for (std::size_t k = n; k-- > 0;) {
    out = kron(out, k == q ? u : Dense::eye(2));
  }
  return out;
}

/// Projector-sum construction of a controlled-U: |0><0|_c (x) I +
/// |1><1|_c (x) U_t.
inline Dense controlled(const Dense& u, std::size_t c, std::size_t t,
                        std::size_t n) {
  const Dense p0 = mat2(1.0, 0.0, 0.0, 0.0);
  const Dense p1 = mat2(0.0, 0.0, 0.0, 1.0);
  Dense left = Dense::eye(1);
  Dense right = Dense::eye(1);
  for (std::size_t k = n; k-- > 0;) {
    left = kron(left, k == c ? p0 : Dense::eye(2));
    right = kron(right, k == c ? p1 : (k == t ? u : Dense::eye(2)));
  }
  Dense out(left.dim);
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = left.a[i] + right.a[i];
  return out;
}

/// SWAP as the permutation matrix exchanging bits a and b.
inline Dense swap_op(std::size_t a, std::size_t b, std::size_t n) {
  Dense out(std::size_t{1} << n);
  for (std::size_t i = 0; i < out.dim; ++i) {
    const std::size_t ba = (i >> a) & 1u;
    const std::size_t bb = (i >> b) & 1u;
    std::size_t j = i & ~((std::size_t{1} << a) | (std::size_t{1} << b));
    j |= (ba << b) | (bb << a);
    out(j, i) = 1.0;
  }
  return out;
}

inline Dense gate_operator(const qprof::Instruction& op, std::size_t n) {
  using qprof::GateType;
  const auto& q = op.qubits;
  switch (op.type) {
    case GateType::H:
      return embed1(gate_h(), q[0], n);
    case GateType::X:
      return embed1(gate_x(), q[0], n);
    case GateType::SX:
      return embed1(gate_sx(), q[0], n);
    case GateType::RZ:
      return embed1(gate_rz(op.angle), q[0], n);
    case GateType::DELAY:
      return Dense::eye(std::size_t{1} << n);
    case GateType::CX:
      return controlled(gate_x(), q[0], q[1], n);
    case GateType::CP:
      return controlled(mat2(1.0, 0.0, 0.0, std::polar(1.0, op.angle)), q[0],
                        q[1], n);
    case GateType::SWAP:
      return swap_op(q[0], q[1], n);
    case GateType::BOX:
      break;
  }
  throw std::invalid_argument("oracle cannot build an operator for BOX");
}

/// Product of gate operators in circuit order (later gates on the left).
inline Dense circuit_operator(const qprof::Circuit& c) {
  const std::size_t n = c.num_qubits();
  Dense u = Dense::eye(std::size_t{1} << n);
  for (const auto& op : c.instructions()) u = matmul(gate_operator(op, n), u);
  return u;
}

/// min over unit phases of max |a - e^{i phi} b|, with phi taken from the
/// largest entry of a (a stable, independent choice).
inline double phase_free_distance(const Dense& a, const Dense& b) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.a.size(); ++i) {
    if (std::abs(a.a[i]) > std::abs(a.a[k])) k = i;
  }
  C phase = 1.0;
  if (std::abs(b.a[k]) > 0.0) phase = (a.a[k] / b.a[k]) / std::abs(a.a[k] / b.a[k]);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.a.size(); ++i) {
    worst = std::max(worst, std::abs(a.a[i] - phase * b.a[i]));
  }
  return worst;
}

inline bool same_up_to_phase(const Dense& a, const Dense& b,
                             double tol = 1e-9) {
  return a.dim == b.dim && phase_free_distance(a, b) <= tol;
}

// --- graphs ----------------------------------------------------------------

using EdgeList = std::vector<std::pair<unsigned, unsigned>>;

/// Tries every injection of the pattern's nodes into the host's nodes.
inline bool monomorphism_exists(std::size_t pn, const EdgeList& pattern,
                                std::size_t hn, const EdgeList& host) {
  if (pn > hn) return false;
  std::set<std::pair<unsigned, unsigned>> hset;
  for (auto [a, b] : host) {
    hset.insert({a, b});
    hset.insert({b, a});
  }
  // Enumerate ordered pn-subsets of host nodes via permutations of a
  // selection mask.
  std::vector<unsigned> nodes(hn);
  std::iota(nodes.begin(), nodes.end(), 0u);
  std::vector<bool> pick(hn, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(pn), true);
  do {
    std::vector<unsigned> chosen;
    for (std::size_t i = 0; i < hn; ++i)
      if (pick[i]) chosen.push_back(nodes[i]);
    std::sort(chosen.begin(), chosen.end());
    do {
      bool ok = true;
      for (auto [a, b] : pattern) {
        if (!hset.count({chosen[a], chosen[b]})) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

/// Every edge set on n nodes with each pair present with probability p.
inline EdgeList random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  EdgeList out;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b)
      if (coin(rng)) out.emplace_back(a, b);
  return out;
}

// --- circuits --------------------------------------------------------------

inline bool shares_qubit(const qprof::Instruction& a,
                         const qprof::Instruction& b) {
  for (auto x : a.qubits)
    for (auto y : b.qubits)
      if (x == y) return true;
  return false;
}

/// Longest chain of instructions in which consecutive members share a
/// qubit, found by O(n^2) dynamic programming over all earlier sharers.
inline std::size_t longest_path_depth(const qprof::Circuit& c) {
  const auto& ops = c.instructions();
  std::vector<std::size_t> len(ops.size(), 1);
  std::size_t best = 0;
  for (std::size_t j = 0; j < ops.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i)
      if (shares_qubit(ops[i], ops[j])) len[j] = std::max(len[j], len[i] + 1);
    best = std::max(best, len[j]);
  }
  return best;
}

/// Earliest start of each instruction given per-instruction durations:
/// start(j) = max over earlier instructions i sharing a qubit of
/// start(i) + duration(i).
inline std::vector<std::int64_t> earliest_starts(
    const qprof::Circuit& c, const std::vector<std::int64_t>& durations) {
  const auto& ops = c.instructions();
  std::vector<std::int64_t> start(ops.size(), 0);
  for (std::size_t j = 0; j < ops.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (shares_qubit(ops[i], ops[j]))
        start[j] = std::max(start[j], start[i] + durations[i]);
  return start;
}

/// Are instructions i < j neighbours in the dependency DAG on every qubit
/// they touch, i.e. no instruction strictly between them touches any of
/// those qubits?
inline bool dag_adjacent(const std::vector<qprof::Instruction>& ops,
                         std::size_t i, std::size_t j) {
  for (std::size_t k = i + 1; k < j; ++k) {
    if (shares_qubit(ops[k], ops[i]) || shares_qubit(ops[k], ops[j])) {
      return false;
    }
  }
  return true;
}

/// Instructions that are pairwise inverse under the cancellation rules.
inline bool inverse_pair(const qprof::Instruction& a,
                         const qprof::Instruction& b) {
  using qprof::GateType;
  if (a.type != b.type) return false;
  switch (a.type) {
    case GateType::H:
    case GateType::X:
    case GateType::CX:
      return a.qubits == b.qubits;
    case GateType::SWAP: {
      auto x = a.qubits, y = b.qubits;
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      return x == y;
    }
    case GateType::RZ: {
      if (a.qubits != b.qubits) return false;
      const double s = std::remainder(a.angle + b.angle, 2 * kPi);
      return std::abs(s) < 1e-12;
    }
    default:
      return false;
  }
}

/// Removes one DAG-adjacent inverse pair at a time (leftmost first) until
/// none is left.
inline std::vector<qprof::Instruction> cancel_by_search(
    std::vector<qprof::Instruction> ops) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < ops.size() && !changed; ++j) {
      for (std::size_t i = j; i-- > 0;) {
        if (!shares_qubit(ops[i], ops[j])) continue;
        // ops[i] is the nearest earlier instruction touching ops[j].
        if (inverse_pair(ops[i], ops[j]) && dag_adjacent(ops, i, j)) {
          ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(j));
          ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
        }
        break;
      }
    }
  }
  return ops;
}

/// Random circuit over {H, X, SX, RZ, CX, SWAP, CP}.
inline qprof::Circuit random_circuit(std::size_t n, std::size_t len,
                                     std::mt19937& rng,
                                     bool two_qubit = true) {
  using qprof::Instruction;
  qprof::Circuit c(n);
  std::uniform_int_distribution<int> kind(0, two_qubit && n > 1 ? 6 : 3);
  std::uniform_int_distribution<unsigned> qubit(0, static_cast<unsigned>(n - 1));
  // Angles from a small set so that inverse pairs actually occur.
  const double angles[] = {kPi / 2, -kPi / 2, kPi / 4, -kPi / 4, 0.3, -0.3};
  std::uniform_int_distribution<int> angle(0, 5);
  for (std::size_t i = 0; i < len; ++i) {
    const unsigned a = qubit(rng);
    unsigned b = qubit(rng);
    while (n > 1 && b == a) b = qubit(rng);
    switch (kind(rng)) {
      case 0: c.append(Instruction::h(a)); break;
      case 1: c.append(Instruction::x(a)); break;
      case 2: c.append(Instruction::sx(a)); break;
      case 3: c.append(Instruction::rz(angles[angle(rng)], a)); break;
      case 4: c.append(Instruction::cx(a, b)); break;
      case 5: c.append(Instruction::swap(a, b)); break;
      default: c.append(Instruction::cp(angles[angle(rng)], a, b)); break;
    }
  }
  return c;
}

}  // namespace oracle
