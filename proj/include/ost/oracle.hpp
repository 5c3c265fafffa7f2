// Copyright 2026 The OST Authors
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

// Brute-force reference optimum for desk-size instances.
//
// Enumerates every link subset that forms a tree spanning the source and all
// terminals in which every leaf is a terminal or the source. Each tree link
// carries the largest demand found below it, which is the least feasible
// flow for that tree. Deliberately shares no code with the DP solver.

#ifndef OST_ORACLE_HPP_
#define OST_ORACLE_HPP_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ost/flow_solution.hpp"
#include "ost/graph.hpp"

namespace ost {

struct OracleLimits {
  int max_nodes = 10;
  int max_edges = 20;
};

class OracleLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

class TreeEnumerator {
 public:
  explicit TreeEnumerator(const Instance& inst) : inst_(inst), g_(inst.graph()) {
    const int m = g_.node_count();
    parent_.resize(m);
    for (NodeId v = 0; v < m; ++v) parent_[v] = v;
    degree_.assign(m, 0);
    required_count_ = 1 + inst.terminal_count();
  }

  void run() { descend(0); }

  bool found() const { return best_cost_ < kNone; }
  double best_cost() const { return best_cost_; }
  const std::vector<EdgeId>& best_edges() const { return best_edges_; }

 private:
  static constexpr double kNone = std::numeric_limits<double>::infinity();

  // Union-find without path compression so that unions can be rolled back.
  NodeId find(NodeId v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  void descend(int next) {
    const int m = g_.node_count();
    if (static_cast<int>(chosen_.size()) >= required_count_ - 1) evaluate();
    if (static_cast<int>(chosen_.size()) == m - 1) return;
    for (int e = next; e < g_.edge_count(); ++e) {
      const Edge& edge = g_.edge(e);
      NodeId a = find(edge.u), b = find(edge.v);
      if (a == b) continue;
      parent_[a] = b;
      ++degree_[edge.u];
      ++degree_[edge.v];
      chosen_.push_back(e);
      descend(e + 1);
      chosen_.pop_back();
      --degree_[edge.u];
      --degree_[edge.v];
      parent_[a] = a;
    }
  }

  void evaluate() {
    // Spanning tree of the touched nodes: one component holding every
    // required node, and no touched node outside it.
    const NodeId root = find(inst_.source());
    for (const Terminal& t : inst_.terminals()) {
      if (find(t.node) != root) return;
    }
    int touched = 0;
    for (NodeId v = 0; v < g_.node_count(); ++v) {
      if (degree_[v] == 0) continue;
      ++touched;
      if (find(v) != root) return;
      if (degree_[v] == 1 && !inst_.is_required(v)) return;
    }
    if (touched != static_cast<int>(chosen_.size()) + 1) return;

    const double cost = tree_cost();
    auto key = sorted_pairs(chosen_);
    if (cost < best_cost_ - 1e-12 ||
        (std::abs(cost - best_cost_) <= 1e-12 && key < sorted_pairs(best_edges_))) {
      best_cost_ = cost;
      best_edges_ = chosen_;
    }
  }

  std::vector<std::pair<NodeId, NodeId>> sorted_pairs(const std::vector<EdgeId>& ids) const {
    std::vector<std::pair<NodeId, NodeId>> out;
    for (EdgeId e : ids) {
      const Edge& edge = g_.edge(e);
      out.emplace_back(std::min(edge.u, edge.v), std::max(edge.u, edge.v));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Sum over tree links of weight * (largest demand strictly below the link).
  double tree_cost() const {
    double total = 0.0;
    for (EdgeId e : chosen_) {
      const Edge& edge = g_.edge(e);
      total += edge.weight * demand_below(edge.u, edge.v);
    }
    return total;
  }

  // Largest demand on the side of link (u, v) that does not hold the source.
  double demand_below(NodeId u, NodeId v) const {
    // Side of v when the link is cut.
    std::vector<NodeId> side_v = component_without(v, u);
    bool source_on_v = std::find(side_v.begin(), side_v.end(), inst_.source()) != side_v.end();
    std::vector<NodeId> far = source_on_v ? component_without(u, v) : std::move(side_v);
    double best = 0.0;
    for (NodeId w : far) best = std::max(best, inst_.demand_of(w));
    return best;
  }

  std::vector<NodeId> component_without(NodeId start, NodeId banned) const {
    std::vector<NodeId> seen{start};
    for (std::size_t h = 0; h < seen.size(); ++h) {
      const NodeId x = seen[h];
      for (EdgeId e : chosen_) {
        const Edge& edge = g_.edge(e);
        NodeId y;
        if (edge.u == x) y = edge.v;
        else if (edge.v == x) y = edge.u;
        else continue;
        if ((x == start && y == banned) || (x == banned && y == start)) continue;
        if (std::find(seen.begin(), seen.end(), y) == seen.end()) seen.push_back(y);
      }
    }
    return seen;
  }

  const Instance& inst_;
  const Graph& g_;
  std::vector<NodeId> parent_;
  std::vector<int> degree_;
  std::vector<EdgeId> chosen_;
  int required_count_ = 0;
  double best_cost_ = kNone;
  std::vector<EdgeId> best_edges_;
};

}  // namespace detail

/// Exhaustive optimum. Throws OracleLimitError outside `lim` and
/// InfeasibleInstance when a terminal is unreachable.
inline FlowSolution brute_force_optimum(const Instance& inst, OracleLimits lim = {}) {
  const auto start = std::chrono::steady_clock::now();
  const Graph& g = inst.graph();
  if (g.node_count() > lim.max_nodes || g.edge_count() > lim.max_edges) {
    throw OracleLimitError("oracle limit: instance has " + std::to_string(g.node_count()) +
                           " nodes and " + std::to_string(g.edge_count()) + " edges");
  }
  require_feasible(inst);

  detail::TreeEnumerator search(inst);
  search.run();
  if (!search.found()) throw std::logic_error("oracle found no tree on a feasible instance");

  // Orient the chosen tree away from the source; flows by subtree maximum.
  const int m = g.node_count();
  std::vector<std::vector<std::pair<NodeId, EdgeId>>> adj(m);
  for (EdgeId e : search.best_edges()) {
    adj[g.edge(e).u].emplace_back(g.edge(e).v, e);
    adj[g.edge(e).v].emplace_back(g.edge(e).u, e);
  }
  std::vector<NodeId> up(m, -1), order{inst.source()};
  up[inst.source()] = inst.source();
  for (std::size_t h = 0; h < order.size(); ++h) {
    for (auto [w, e] : adj[order[h]]) {
      if (up[w] < 0) {
        up[w] = order[h];
        order.push_back(w);
      }
    }
  }
  std::vector<double> below(m, 0.0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    below[*it] = std::max(below[*it], inst.demand_of(*it));
    if (*it != inst.source()) below[up[*it]] = std::max(below[up[*it]], below[*it]);
  }
  FlowSolution sol;
  sol.algorithm = "oracle";
  for (std::size_t i = 1; i < order.size(); ++i) {
    const NodeId v = order[i];
    sol.flows.emplace(DirectedEdge{up[v], v}, below[v]);
    sol.cost += *g.weight(up[v], v) * below[v];
  }
  sol.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return sol;
}

}  // namespace ost

#endif  // OST_ORACLE_HPP_
