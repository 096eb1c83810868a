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

#include "qprof/target.hpp"

#include <fstream>
#include <iterator>
#include <queue>
#include <sstream>

#include "qprof/errors.hpp"
#include "text_util.hpp"

namespace qprof {

namespace {

void check_cost(const GateCost& c, const std::string& where) {
  if (c.duration < 0) {
    throw InvariantViolation("duration",
                             where + ": duration must be non-negative");
  }
  if (!(c.error >= 0.0 && c.error <= 1.0)) {
    throw InvariantViolation("error", where + ": error must lie in [0, 1]");
  }
}

}  // namespace

Target::Target(std::size_t num_qubits, std::set<std::string> basis,
               std::map<Edge, GateCost> edges,
               std::map<std::string, GateCost> one_qubit_costs,
               std::string name)
    : num_qubits_(num_qubits),
      name_(std::move(name)),
      basis_(std::move(basis)),
      one_qubit_costs_(std::move(one_qubit_costs)),
      adj_(num_qubits) {
  if (num_qubits_ == 0) throw InvariantViolation("qubits", "must be >= 1");
  for (const auto& [edge, cost] : edges) {
    auto [a, b] = edge;
    const std::string where =
        "edge " + std::to_string(a) + " " + std::to_string(b);
    if (a == b) throw InvariantViolation("edge", where + ": self-loop");
    if (a >= num_qubits_ || b >= num_qubits_) {
      throw InvariantViolation(
          "edge", where + ": qubit out of range for " +
                      std::to_string(num_qubits_) + "-qubit target");
    }
    check_cost(cost, where);
    edges_.emplace(make_edge(a, b), cost);
  }
  for (const auto& [gate, cost] : one_qubit_costs_) {
    check_cost(cost, "gate1q " + gate);
  }
  for (const auto& name : basis_) {
    if (!gate_type_from_name(name)) {
      throw InvariantViolation("basis", "unknown gate '" + name + "'");
    }
  }
  for (const auto& [edge, cost] : edges_) {
    adj_[edge.first].push_back(edge.second);
    adj_[edge.second].push_back(edge.first);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

std::optional<GateCost> Target::cost(std::string_view gate,
                                     const std::vector<Qubit>& qubits) const {
  if (qubits.size() == 1) {
    auto it = one_qubit_costs_.find(std::string(gate));
    if (it == one_qubit_costs_.end()) return std::nullopt;
    return it->second;
  }
  if (qubits.size() == 2 && gate == "CX") {
    auto it = edges_.find(make_edge(qubits[0], qubits[1]));
    if (it == edges_.end()) return std::nullopt;
    return it->second;
  }
  return std::nullopt;
}

double Target::edge_error(Qubit a, Qubit b) const {
  auto it = edges_.find(make_edge(a, b));
  return it == edges_.end() ? 1.0 : it->second.error;
}

bool Target::connected() const {
  std::vector<bool> seen(num_qubits_, false);
  std::queue<Qubit> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    Qubit q = todo.front();
    todo.pop();
    for (Qubit n : adj_[q]) {
      if (!seen[n]) {
        seen[n] = true;
        ++count;
        todo.push(n);
      }
    }
  }
  return count == num_qubits_;
}

std::set<std::string> default_basis() { return {"CX", "RZ", "SX", "X"}; }

double default_edge_error(Qubit a, Qubit b, std::size_t num_qubits) {
  return 0.001 * (1.0 + static_cast<double>(a + b) /
                            static_cast<double>(num_qubits));
}

Target make_target(std::size_t num_qubits, const std::vector<Edge>& edges,
                   std::string name) {
  std::map<Edge, GateCost> costs;
  for (auto [a, b] : edges) {
    costs[make_edge(a, b)] = {Target::kDefault2qDuration,
                              default_edge_error(a, b, num_qubits)};
  }
  std::map<std::string, GateCost> one_q;
  for (const char* g : {"RZ", "SX", "X"}) {
    one_q[g] = {Target::kDefault1qDuration, Target::kDefault1qError};
  }
  return Target(num_qubits, default_basis(), std::move(costs),
                std::move(one_q), std::move(name));
}

Target line_target(std::size_t n) {
  if (n == 0) throw InvalidSize("line target needs at least one qubit");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<Qubit>(i), static_cast<Qubit>(i + 1));
  }
  return make_target(n, edges, "line-" + std::to_string(n));
}

Target grid_target(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw InvalidSize("grid target needs non-zero dimensions");
  }
  std::vector<Edge> edges;
  auto id = [cols](std::size_t r, std::size_t c) {
    return static_cast<Qubit>(r * cols + c);
  };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return make_target(rows * cols, edges,
                     "grid-" + std::to_string(rows) + "x" +
                         std::to_string(cols));
}

Target parse_target(std::string_view text, std::string name) {
  std::optional<std::size_t> num_qubits;
  std::optional<std::set<std::string>> basis;
  struct RawEdge {
    Qubit a, b;
    std::optional<Ticks> duration;
    std::optional<double> error;
    std::size_t line;
  };
  std::vector<RawEdge> raw_edges;
  std::map<std::string, GateCost> one_q;

  std::size_t line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    auto fields = detail::split_ws(detail::trim(detail::strip_comment(line)));
    if (fields.empty()) continue;
    const std::string_view key = fields[0];
    if (key == "qubits") {
      if (fields.size() != 2) throw ParseError(line_no, "usage: qubits <n>");
      if (num_qubits) throw ParseError(line_no, "duplicate 'qubits'");
      num_qubits = detail::parse_number<std::size_t>(fields[1], line_no,
                                                     "qubit count");
    } else if (key == "basis") {
      if (!basis) basis.emplace();
      for (std::size_t i = 1; i < fields.size(); ++i) {
        basis->emplace(fields[i]);
      }
    } else if (key == "edge") {
      if (fields.size() < 3 || fields.size() > 5) {
        throw ParseError(line_no, "usage: edge <a> <b> [duration] [error]");
      }
      RawEdge e{detail::parse_number<Qubit>(fields[1], line_no, "qubit"),
                detail::parse_number<Qubit>(fields[2], line_no, "qubit"),
                std::nullopt, std::nullopt, line_no};
      if (fields.size() > 3) {
        e.duration = detail::parse_number<Ticks>(fields[3], line_no,
                                                 "duration");
      }
      if (fields.size() > 4) {
        e.error = detail::parse_number<double>(fields[4], line_no, "error");
      }
      raw_edges.push_back(e);
    } else if (key == "gate1q") {
      if (fields.size() < 2 || fields.size() > 4) {
        throw ParseError(line_no,
                         "usage: gate1q <name> [duration] [error]");
      }
      GateCost c{Target::kDefault1qDuration, Target::kDefault1qError};
      if (fields.size() > 2) {
        c.duration = detail::parse_number<Ticks>(fields[2], line_no,
                                                 "duration");
      }
      if (fields.size() > 3) {
        c.error = detail::parse_number<double>(fields[3], line_no, "error");
      }
      one_q[std::string(fields[1])] = c;
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) +
                                    "'");
    }
  }
  if (!num_qubits) throw ParseError(line_no, "missing 'qubits <n>'");

  std::map<Edge, GateCost> edges;
  for (const RawEdge& e : raw_edges) {
    GateCost c{e.duration.value_or(Target::kDefault2qDuration),
               e.error.value_or(default_edge_error(e.a, e.b, *num_qubits))};
    if (e.a != e.b && !edges.emplace(make_edge(e.a, e.b), c).second) {
      throw ParseError(e.line, "duplicate edge");
    }
    if (e.a == e.b) edges.emplace(Edge{e.a, e.b}, c);
  }
  const std::set<std::string> gates = basis.value_or(default_basis());
  // One-qubit basis gates without a gate1q line get the default cost.
  for (const std::string& g : gates) {
    const auto type = gate_type_from_name(g);
    if (type && fixed_arity(*type) == 1 && *type != GateType::DELAY) {
      one_q.try_emplace(g, GateCost{Target::kDefault1qDuration,
                                    Target::kDefault1qError});
    }
  }
  return Target(*num_qubits, gates, std::move(edges), std::move(one_q),
                std::move(name));
}

Target load_target(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open target file " + path.string());
  }
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  return parse_target(text, path.stem().string());
}

std::string save_target(const Target& target) {
  std::ostringstream os;
  os << "qubits " << target.num_qubits() << '\n';
  os << "basis";
  for (const auto& g : target.basis()) os << ' ' << g;
  os << '\n';
  for (const auto& [gate, c] : target.one_qubit_costs()) {
    os << "gate1q " << gate << ' ' << c.duration << ' '
       << format_double(c.error) << '\n';
  }
  for (const auto& [edge, c] : target.edges()) {
    os << "edge " << edge.first << ' ' << edge.second << ' ' << c.duration
       << ' ' << format_double(c.error) << '\n';
  }
  return os.str();
}

Target resolve_target(std::string_view spec) {
  auto parse_dim = [&](std::string_view s) {
    return detail::parse_number<std::size_t>(s, 0, "target dimension");
  };
  if (spec.starts_with("line:")) return line_target(parse_dim(spec.substr(5)));
  if (spec.starts_with("grid:")) {
    std::string_view dims = spec.substr(5);
    std::size_t x = dims.find_first_of("xX");
    if (x == std::string_view::npos) {
      throw InvalidArgument("grid target must be grid:RxC");
    }
    return grid_target(parse_dim(dims.substr(0, x)),
                       parse_dim(dims.substr(x + 1)));
  }
  std::filesystem::path path{std::string(spec)};
#ifdef QPROF_DATA_DIR
  // Shipped targets can be named without their directory or extension.
  if (!std::filesystem::exists(path)) {
    for (std::filesystem::path alt :
         {std::filesystem::path(QPROF_DATA_DIR) / path,
          std::filesystem::path(QPROF_DATA_DIR) / (path.string() + ".target")}) {
      if (std::filesystem::exists(alt)) return load_target(alt);
    }
  }
#endif
  return load_target(path);
}

}  // namespace qprof
