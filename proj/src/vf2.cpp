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

#include "qprof/vf2.hpp"

#include <algorithm>
#include <limits>

namespace qprof {

UndirectedGraph::UndirectedGraph(std::size_t num_nodes)
    : adj_(num_nodes), matrix_(num_nodes * num_nodes, 0) {}

UndirectedGraph::UndirectedGraph(
    std::size_t num_nodes,
    const std::vector<std::pair<unsigned, unsigned>>& edges)
    : UndirectedGraph(num_nodes) {
  for (auto [a, b] : edges) add_edge(a, b);
}

void UndirectedGraph::add_edge(unsigned a, unsigned b) {
  if (a == b || has_edge(a, b)) return;
  const std::size_t n = adj_.size();
  matrix_[a * n + b] = matrix_[b * n + a] = 1;
  adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
  adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
  ++num_edges_;
}

std::vector<std::pair<unsigned, unsigned>> UndirectedGraph::edges() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned a = 0; a < adj_.size(); ++a) {
    for (unsigned b : adj_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

bool is_monomorphism(const UndirectedGraph& pattern,
                     const UndirectedGraph& host,
                     const std::vector<unsigned>& mapping) {
  if (mapping.size() != pattern.num_nodes()) return false;
  std::vector<bool> used(host.num_nodes(), false);
  for (unsigned h : mapping) {
    if (h >= host.num_nodes() || used[h]) return false;
    used[h] = true;
  }
  for (auto [a, b] : pattern.edges()) {
    if (!host.has_edge(mapping[a], mapping[b])) return false;
  }
  return true;
}

namespace {

constexpr unsigned kUnmapped = std::numeric_limits<unsigned>::max();

class Matcher {
 public:
  Matcher(const UndirectedGraph& pattern, const UndirectedGraph& host,
          const Vf2Budget& budget, const std::vector<double>& costs)
      : pattern_(pattern),
        host_(host),
        budget_(budget),
        costs_(costs),
        map_(pattern.num_nodes(), kUnmapped),
        used_(host.num_nodes(), false) {
    build_order();
  }

  Vf2Result run() {
    Vf2Result result;
    if (pattern_.num_nodes() > host_.num_nodes()) {
      result.complete = true;
      return result;
    }
    search(0, 0.0);
    result.mapping = std::move(best_);
    result.cost = best_cost_;
    result.states_visited = states_;
    result.solutions_seen = solutions_;
    result.complete = !out_of_budget_ && !stopped_early_;
    return result;
  }

 private:
  // Matching order: repeatedly take the highest-degree node adjacent to the
  // matched set (lowest index on ties); when none, start a new component at
  // the highest-degree remaining node.
  void build_order() {
    const std::size_t n = pattern_.num_nodes();
    std::vector<bool> placed(n, false);
    std::vector<unsigned> touching(n, 0);
    std::size_t remaining = 0;
    for (unsigned u = 0; u < n; ++u) {
      if (pattern_.degree(u) > 0) ++remaining;
    }
    unsigned component = 0;
    while (remaining > 0) {
      unsigned pick = kUnmapped;
      bool connected = false;
      for (unsigned u = 0; u < n; ++u) {
        if (placed[u] || pattern_.degree(u) == 0) continue;
        const bool adj = touching[u] > 0;
        if (pick == kUnmapped || (adj && !connected) ||
            (adj == connected && pattern_.degree(u) > pattern_.degree(pick))) {
          pick = u;
          connected = adj;
        }
      }
      if (!connected && !order_.empty()) ++component;
      placed[pick] = true;
      --remaining;
      order_.push_back(pick);
      component_.push_back(component);
      std::vector<unsigned> earlier;
      for (unsigned w : pattern_.neighbours(pick)) {
        if (placed[w] && w != pick) earlier.push_back(w);
        ++touching[w];
      }
      earlier_.push_back(std::move(earlier));
    }
    // Nodes left in the same component after each position.
    remaining_in_component_.assign(order_.size(), 0);
    for (std::size_t i = order_.size(); i-- > 0;) {
      if (i + 1 < order_.size() && component_[i + 1] == component_[i]) {
        remaining_in_component_[i] = remaining_in_component_[i + 1] + 1;
      }
    }
    for (unsigned u = 0; u < n; ++u) {
      if (pattern_.degree(u) == 0) isolated_.push_back(u);
    }
  }

  double edge_cost(unsigned a, unsigned b) const {
    return costs_.empty() ? 0.0 : costs_[a * host_.num_nodes() + b];
  }

  bool feasible(std::size_t pos, unsigned candidate) const {
    const unsigned u = order_[pos];
    if (used_[candidate]) return false;
    if (host_.degree(candidate) < pattern_.degree(u)) return false;
    for (unsigned w : earlier_[pos]) {
      if (!host_.has_edge(map_[w], candidate)) return false;
    }
    return true;
  }

  // The rest of the current pattern component must fit in the free host
  // region reachable from the component's images.
  bool room_for_component(std::size_t pos) {
    const std::size_t need = remaining_in_component_[pos];
    if (need == 0) return true;
    frontier_.clear();
    seen_.assign(host_.num_nodes(), false);
    for (std::size_t i = pos + 1; i-- > 0;) {
      if (component_[i] != component_[pos]) break;
      for (unsigned h : host_.neighbours(map_[order_[i]])) {
        if (!used_[h] && !seen_[h]) {
          seen_[h] = true;
          frontier_.push_back(h);
        }
      }
    }
    std::size_t count = 0;
    while (!frontier_.empty() && count < need) {
      unsigned h = frontier_.back();
      frontier_.pop_back();
      ++count;
      for (unsigned n : host_.neighbours(h)) {
        if (!used_[n] && !seen_[n]) {
          seen_[n] = true;
          frontier_.push_back(n);
        }
      }
    }
    return count >= need;
  }

  void search(std::size_t pos, double cost) {
    if (pos == order_.size()) {
      record_solution(cost);
      return;
    }
    const unsigned u = order_[pos];
    // Candidates: free neighbours of an already-mapped neighbour's image,
    // or every host node when starting a component.
    const std::vector<unsigned>* pool = nullptr;
    if (!earlier_[pos].empty()) pool = &host_.neighbours(map_[earlier_[pos][0]]);
    const std::size_t pool_size = pool ? pool->size() : host_.num_nodes();
    for (std::size_t k = 0; k < pool_size; ++k) {
      const unsigned c = pool ? (*pool)[k] : static_cast<unsigned>(k);
      if (!feasible(pos, c)) continue;
      if (budget_.max_states != 0 && states_ >= budget_.max_states) {
        out_of_budget_ = true;
        return;
      }
      ++states_;
      double added = 0.0;
      for (unsigned w : earlier_[pos]) added += edge_cost(map_[w], c);
      const double next = cost + added;
      if (best_ && next > best_cost_) continue;
      map_[u] = c;
      used_[c] = true;
      if (room_for_component(pos)) search(pos + 1, next);
      map_[u] = kUnmapped;
      used_[c] = false;
      if (out_of_budget_ || stopped_early_) return;
    }
  }

  void record_solution(double cost) {
    ++solutions_;
    std::vector<unsigned> full = map_;
    std::vector<bool> used = used_;
    unsigned next_free = 0;
    for (unsigned u : isolated_) {
      while (used[next_free]) ++next_free;
      full[u] = next_free;
      used[next_free] = true;
    }
    if (!best_ || cost < best_cost_ || (cost == best_cost_ && full < *best_)) {
      best_ = std::move(full);
      best_cost_ = cost;
    }
    if (budget_.scoring == Vf2Scoring::kFirst) stopped_early_ = true;
  }

  const UndirectedGraph& pattern_;
  const UndirectedGraph& host_;
  Vf2Budget budget_;
  const std::vector<double>& costs_;

  std::vector<unsigned> order_;
  std::vector<unsigned> component_;
  std::vector<std::vector<unsigned>> earlier_;
  std::vector<std::size_t> remaining_in_component_;
  std::vector<unsigned> isolated_;

  std::vector<unsigned> map_;
  std::vector<bool> used_;
  std::vector<unsigned> frontier_;
  std::vector<bool> seen_;

  std::optional<std::vector<unsigned>> best_;
  double best_cost_ = 0.0;
  std::size_t states_ = 0;
  std::size_t solutions_ = 0;
  bool out_of_budget_ = false;
  bool stopped_early_ = false;
};

}  // namespace

Vf2Result find_monomorphism(const UndirectedGraph& pattern,
                            const UndirectedGraph& host,
                            const Vf2Budget& budget,
                            const std::vector<double>& host_edge_cost) {
  return Matcher(pattern, host, budget, host_edge_cost).run();
}

}  // namespace qprof
