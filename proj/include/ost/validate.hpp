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

// Feasibility and structure checks for flow networks.
//
// Flows are per-link stream rates: a relay replicates its incoming stream,
// so node balance uses max semantics (max outflow <= max inflow) rather
// than conservation of a divisible commodity.

#ifndef OST_VALIDATE_HPP_
#define OST_VALIDATE_HPP_

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ost/flow_solution.hpp"
#include "ost/graph.hpp"

namespace ost {

enum class ViolationCode {
  kNegFlow,
  kNonedgeFlow,
  kRelayConservation,
  kSourceSupply,
  kTerminalDemand,
  kNotTree,
  kLeafNotTerminal,
  kBadOrientation,
  kFlowLaw,
};

inline std::string_view to_string(ViolationCode c) {
  switch (c) {
    case ViolationCode::kNegFlow: return "NEG_FLOW";
    case ViolationCode::kNonedgeFlow: return "NONEDGE_FLOW";
    case ViolationCode::kRelayConservation: return "RELAY_CONSERVATION";
    case ViolationCode::kSourceSupply: return "SOURCE_SUPPLY";
    case ViolationCode::kTerminalDemand: return "TERMINAL_DEMAND";
    case ViolationCode::kNotTree: return "NOT_TREE";
    case ViolationCode::kLeafNotTerminal: return "LEAF_NOT_TERMINAL";
    case ViolationCode::kBadOrientation: return "BAD_ORIENTATION";
    case ViolationCode::kFlowLaw: return "FLOW_LAW";
  }
  return "UNKNOWN";
}

struct Violation {
  ViolationCode code;
  std::string location;  // "3" for a node, "3->1" for an edge, "-" for none
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationCode c) const {
    return std::any_of(violations.begin(), violations.end(),
                       [c](const Violation& v) { return v.code == c; });
  }
  void add(ViolationCode c, std::string location, std::string detail) {
    violations.push_back({c, std::move(location), std::move(detail)});
  }
  void append(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
  /// One line per violation: `CODE location detail`.
  std::string to_text() const {
    std::string out;
    for (const Violation& v : violations) {
      out += std::string(to_string(v.code)) + " " + v.location + " " + v.detail + "\n";
    }
    return out;
  }
};

namespace detail {

inline std::string fmt_real(double x) {
  std::ostringstream ss;
  ss.precision(12);
  ss << x;
  return ss.str();
}

inline std::string edge_loc(const DirectedEdge& e) {
  return std::to_string(e.from) + "->" + std::to_string(e.to);
}

}  // namespace detail

/// Objective value: sum of weight * flow over the flow edges. Throws
/// std::invalid_argument for a flow on a link absent from the graph.
inline double total_cost(const Instance& inst, const FlowSolution& sol) {
  double cost = 0.0;
  for (const auto& [e, f] : sol.flows) {
    auto w = inst.graph().weight(e.from, e.to);
    if (!w) throw std::invalid_argument("flow on non-existent edge " + detail::edge_loc(e));
    cost += *w * f;
  }
  return cost;
}

inline ValidationReport check_constraints(const Instance& inst, const FlowSolution& sol) {
  ValidationReport report;
  const Graph& g = inst.graph();
  const int m = g.node_count();
  std::vector<double> max_in(m, 0.0), max_out(m, 0.0);
  for (const auto& [e, f] : sol.flows) {
    if (!(f > 0.0)) report.add(ViolationCode::kNegFlow, detail::edge_loc(e),
                               "flow " + detail::fmt_real(f) + " is not positive");
    if (!g.contains(e.from) || !g.contains(e.to) || !g.find_edge(e.from, e.to)) {
      report.add(ViolationCode::kNonedgeFlow, detail::edge_loc(e), "edge absent from graph");
      continue;
    }
    max_out[e.from] = std::max(max_out[e.from], f);
    max_in[e.to] = std::max(max_in[e.to], f);
  }
  for (NodeId v = 0; v < m; ++v) {
    if (v == inst.source()) continue;
    if (max_out[v] > max_in[v] + kTolerance) {
      report.add(ViolationCode::kRelayConservation, std::to_string(v),
                 "max outflow " + detail::fmt_real(max_out[v]) + " > max inflow " +
                     detail::fmt_real(max_in[v]));
    }
  }
  const double need = inst.max_demand();
  if (max_out[inst.source()] < need - kTolerance) {
    report.add(ViolationCode::kSourceSupply, std::to_string(inst.source()),
               "max outflow " + detail::fmt_real(max_out[inst.source()]) + " < max demand " +
                   detail::fmt_real(need));
  }
  for (const Terminal& t : inst.terminals()) {
    if (max_in[t.node] < t.demand - kTolerance) {
      report.add(ViolationCode::kTerminalDemand, std::to_string(t.node),
                 "max inflow " + detail::fmt_real(max_in[t.node]) + " < demand " +
                     detail::fmt_real(t.demand));
    }
  }
  return report;
}

inline ValidationReport check_tree(const Instance& inst, const FlowSolution& sol) {
  ValidationReport report;
  const int m = inst.graph().node_count();
  std::map<std::pair<NodeId, NodeId>, int> support;
  for (const auto& [e, f] : sol.flows) {
    if (e.from < 0 || e.from >= m || e.to < 0 || e.to >= m || e.from == e.to) {
      report.add(ViolationCode::kNotTree, detail::edge_loc(e), "edge outside the node range");
      return report;
    }
    ++support[{std::min(e.from, e.to), std::max(e.from, e.to)}];
  }
  std::vector<std::vector<NodeId>> adj(m);
  std::vector<bool> in_support(m, false);
  for (const auto& [p, count] : support) {
    if (count > 1) {
      report.add(ViolationCode::kBadOrientation,
                 std::to_string(p.first) + "-" + std::to_string(p.second),
                 "flow in both directions");
    }
    adj[p.first].push_back(p.second);
    adj[p.second].push_back(p.first);
    in_support[p.first] = in_support[p.second] = true;
  }

  // Cycles: union-find over the support; the closing edge plus the forest
  // path between its endpoints is the reported cycle.
  std::vector<NodeId> parent(m);
  for (NodeId v = 0; v < m; ++v) parent[v] = v;
  auto find = [&](NodeId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<std::vector<NodeId>> forest(m);
  bool acyclic = true;
  for (const auto& [p, count] : support) {
    NodeId a = find(p.first), b = find(p.second);
    if (a != b) {
      parent[a] = b;
      forest[p.first].push_back(p.second);
      forest[p.second].push_back(p.first);
      continue;
    }
    acyclic = false;
    std::vector<NodeId> prev(m, -1);
    std::vector<NodeId> queue{p.first};
    prev[p.first] = p.first;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (NodeId w : forest[queue[h]]) {
        if (prev[w] < 0) {
          prev[w] = queue[h];
          queue.push_back(w);
        }
      }
    }
    std::vector<NodeId> ring{p.second};
    for (NodeId w = p.second; w != p.first;) {
      w = prev[w];
      ring.push_back(w);
    }
    // Start at the smallest node, walk toward its smaller neighbor.
    std::rotate(ring.begin(), std::min_element(ring.begin(), ring.end()), ring.end());
    if (ring.size() > 2 && ring.back() < ring[1]) std::reverse(ring.begin() + 1, ring.end());
    std::string cycle;
    for (NodeId w : ring) cycle += std::to_string(w) + "-";
    cycle += std::to_string(ring.front());
    report.add(ViolationCode::kNotTree, "-", "cycle " + cycle);
  }

  bool connected = true;
  if (!in_support[inst.source()]) {
    connected = false;
    report.add(ViolationCode::kNotTree, std::to_string(inst.source()), "source not in support");
  } else {
    for (const Terminal& t : inst.terminals()) {
      if (!in_support[t.node] || find(t.node) != find(inst.source())) {
        connected = false;
        report.add(ViolationCode::kNotTree, std::to_string(t.node),
                   "terminal not connected to source");
      }
    }
    for (NodeId v = 0; v < m; ++v) {
      if (in_support[v] && find(v) != find(inst.source()) && !inst.is_terminal(v)) {
        connected = false;
        report.add(ViolationCode::kNotTree, std::to_string(v), "node disconnected from source");
      }
    }
  }

  for (NodeId v = 0; v < m; ++v) {
    if (v != inst.source() && adj[v].size() == 1 && !inst.is_terminal(v)) {
      report.add(ViolationCode::kLeafNotTerminal, std::to_string(v), "leaf is not a terminal");
    }
  }

  if (acyclic && connected) {
    std::vector<NodeId> up(m, -1);
    std::vector<NodeId> queue{inst.source()};
    up[inst.source()] = inst.source();
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (NodeId w : adj[queue[h]]) {
        if (up[w] < 0) {
          up[w] = queue[h];
          queue.push_back(w);
        }
      }
    }
    for (const auto& [e, f] : sol.flows) {
      if (up[e.to] != e.from) {
        report.add(ViolationCode::kBadOrientation, detail::edge_loc(e),
                   "edge points toward the source");
      }
    }
  }
  return report;
}

/// Each tree edge must carry exactly the largest demand among terminals
/// below it. A property of minimal solutions, not a feasibility condition.
/// Throws std::invalid_argument("not a tree") unless check_tree passes.
inline ValidationReport check_flow_law(const Instance& inst, const FlowSolution& sol) {
  if (!check_tree(inst, sol).ok()) throw std::invalid_argument("not a tree");
  const int m = inst.graph().node_count();
  std::vector<std::vector<NodeId>> children(m);
  for (const auto& [e, f] : sol.flows) children[e.from].push_back(e.to);

  // Post-order over the rooted tree.
  std::vector<double> below(m, 0.0);
  std::vector<NodeId> order{inst.source()};
  for (std::size_t h = 0; h < order.size(); ++h) {
    for (NodeId c : children[order[h]]) order.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    below[*it] = std::max(below[*it], inst.demand_of(*it));
    for (NodeId c : children[*it]) below[*it] = std::max(below[*it], below[c]);
  }

  ValidationReport report;
  for (const auto& [e, f] : sol.flows) {
    if (std::abs(f - below[e.to]) > kTolerance) {
      report.add(ViolationCode::kFlowLaw, detail::edge_loc(e),
                 "flow " + detail::fmt_real(f) + ", expected " + detail::fmt_real(below[e.to]));
    }
  }
  return report;
}

}  // namespace ost

#endif  // OST_VALIDATE_HPP_
