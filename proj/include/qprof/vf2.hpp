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

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace qprof {

/// Simple undirected graph with O(1) adjacency queries.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t num_nodes);
  UndirectedGraph(std::size_t num_nodes,
                  const std::vector<std::pair<unsigned, unsigned>>& edges);

  /// Ignores self-loops and duplicates.
  void add_edge(unsigned a, unsigned b);

  std::size_t num_nodes() const { return adj_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  bool has_edge(unsigned a, unsigned b) const {
    return matrix_[a * adj_.size() + b] != 0;
  }
  const std::vector<unsigned>& neighbours(unsigned n) const { return adj_[n]; }
  std::size_t degree(unsigned n) const { return adj_[n].size(); }
  std::vector<std::pair<unsigned, unsigned>> edges() const;

 private:
  std::vector<std::vector<unsigned>> adj_;
  std::vector<unsigned char> matrix_;
  std::size_t num_edges_ = 0;
};

enum class Vf2Scoring {
  /// Stop at the first monomorphism found.
  kFirst,
  /// Enumerate until the state budget runs out and keep the cheapest.
  kExhaustive,
};

struct Vf2Budget {
  /// Maximum number of search states (partial mappings) visited;
  /// 0 means unbounded.
  std::size_t max_states = 0;
  Vf2Scoring scoring = Vf2Scoring::kFirst;
};

struct Vf2Result {
  /// pattern node -> host node, when a monomorphism was found.
  std::optional<std::vector<unsigned>> mapping;
  double cost = 0.0;
  std::size_t states_visited = 0;
  std::size_t solutions_seen = 0;
  /// True when the search space was fully explored within the budget.
  bool complete = false;
};

/// Depth-first monomorphism search from `pattern` into `host`.
///
/// Pattern nodes are matched in order of descending degree, growing from the
/// already-matched set; host candidates are tried in ascending index order.
/// With kExhaustive the returned mapping minimises the summed
/// `host_edge_cost` over mapped pattern edges (row-major host_n x host_n;
/// empty means every edge costs 0), ties broken by the lexicographically
/// smallest mapping vector. Isolated pattern nodes are placed on the lowest
/// free host nodes after the search.
Vf2Result find_monomorphism(const UndirectedGraph& pattern,
                            const UndirectedGraph& host,
                            const Vf2Budget& budget,
                            const std::vector<double>& host_edge_cost = {});

/// True iff `mapping` is injective and sends every pattern edge to a host
/// edge.
bool is_monomorphism(const UndirectedGraph& pattern,
                     const UndirectedGraph& host,
                     const std::vector<unsigned>& mapping);

}  // namespace qprof
