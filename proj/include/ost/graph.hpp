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

#ifndef OST_GRAPH_HPP_
#define OST_GRAPH_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ost {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;

/// Raised when an instance violates a structural invariant. The message
/// starts with the offending field path, e.g. "edges[3]: self-loop".
class InstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 0.0;  // unit cost per unit of flow
};

/// Undirected weighted topology. Immutable after construction.
class Graph {
 public:
  struct Arc {
    NodeId to;
    double weight;
    EdgeId edge;
  };

  Graph() = default;

  Graph(int node_count, std::vector<Edge> edges)
      : node_count_(node_count), edges_(std::move(edges)) {
    if (node_count_ <= 0) throw InstanceError("nodes: must be positive");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      const std::string path = "edges[" + std::to_string(i) + "]";
      if (e.u < 0 || e.u >= node_count_ || e.v < 0 || e.v >= node_count_) {
        throw InstanceError(path + ": node id out of range");
      }
      if (e.u == e.v) throw InstanceError(path + ": self-loop");
      if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
        throw InstanceError(path + ": weight must be finite and >= 0");
      }
    }
    adjacency_.assign(node_count_, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      adjacency_[e.u].push_back({e.v, e.weight, static_cast<EdgeId>(i)});
      adjacency_[e.v].push_back({e.u, e.weight, static_cast<EdgeId>(i)});
    }
    for (NodeId v = 0; v < node_count_; ++v) {
      auto& adj = adjacency_[v];
      std::sort(adj.begin(), adj.end(),
                [](const Arc& a, const Arc& b) { return a.to < b.to; });
      for (std::size_t k = 1; k < adj.size(); ++k) {
        if (adj[k].to == adj[k - 1].to) {
          throw InstanceError("edges[" + std::to_string(std::max(adj[k].edge, adj[k - 1].edge)) +
                              "]: duplicate edge {" + std::to_string(std::min(v, adj[k].to)) +
                              "," + std::to_string(std::max(v, adj[k].to)) + "}");
        }
      }
    }
  }

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  /// Neighbors of v sorted by neighbor id.
  std::span<const Arc> neighbors(NodeId v) const { return adjacency_[v]; }

  std::optional<EdgeId> find_edge(NodeId u, NodeId v) const {
    if (u < 0 || u >= node_count_ || v < 0 || v >= node_count_) return std::nullopt;
    const auto& adj = adjacency_[u];
    auto it = std::lower_bound(adj.begin(), adj.end(), v,
                               [](const Arc& a, NodeId x) { return a.to < x; });
    if (it == adj.end() || it->to != v) return std::nullopt;
    return it->edge;
  }

  std::optional<double> weight(NodeId u, NodeId v) const {
    auto id = find_edge(u, v);
    if (!id) return std::nullopt;
    return edges_[*id].weight;
  }

  bool contains(NodeId v) const { return v >= 0 && v < node_count_; }

  /// Nodes reachable from `from` (breadth-first).
  std::vector<bool> reachable_from(NodeId from) const {
    std::vector<bool> seen(node_count_, false);
    std::vector<NodeId> queue{from};
    seen[from] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Arc& a : adjacency_[queue[head]]) {
        if (!seen[a.to]) {
          seen[a.to] = true;
          queue.push_back(a.to);
        }
      }
    }
    return seen;
  }

  bool is_connected() const {
    auto seen = reachable_from(0);
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Arc>> adjacency_;
};

struct Terminal {
  NodeId node = 0;
  double demand = 0.0;  // requested stream rate, 1 = full resolution
};

/// A single-source multicast request over a graph. Terminals are kept
/// sorted by node id; terminal index i (bit i of a subset mask) refers to
/// terminals()[i].
class Instance {
 public:
  Instance() = default;

  Instance(Graph graph, NodeId source, std::vector<Terminal> terminals)
      : graph_(std::move(graph)), source_(source), terminals_(std::move(terminals)) {
    const int m = graph_.node_count();
    if (!graph_.contains(source_)) throw InstanceError("source: node id out of range");
    if (terminals_.empty()) throw InstanceError("terminals: at least one terminal required");
    if (static_cast<int>(terminals_.size()) > m - 1) {
      throw InstanceError("terminals: more terminals than non-source nodes");
    }
    for (std::size_t i = 0; i < terminals_.size(); ++i) {
      const Terminal& t = terminals_[i];
      const std::string path = "terminals[" + std::to_string(i) + "]";
      if (!graph_.contains(t.node)) throw InstanceError(path + ".node: node id out of range");
      if (t.node == source_) throw InstanceError(path + ".node: source in terminal set");
      if (!(t.demand > 0.0) || !std::isfinite(t.demand)) {
        throw InstanceError(path + ".demand: must be finite and > 0");
      }
    }
    std::sort(terminals_.begin(), terminals_.end(),
              [](const Terminal& a, const Terminal& b) { return a.node < b.node; });
    for (std::size_t i = 1; i < terminals_.size(); ++i) {
      if (terminals_[i].node == terminals_[i - 1].node) {
        throw InstanceError("terminals: duplicate terminal node " +
                            std::to_string(terminals_[i].node));
      }
    }
  }

  const Graph& graph() const { return graph_; }
  NodeId source() const { return source_; }
  std::span<const Terminal> terminals() const { return terminals_; }
  int terminal_count() const { return static_cast<int>(terminals_.size()); }

  /// Index of `v` in terminals(), or -1.
  int terminal_index(NodeId v) const {
    auto it = std::lower_bound(terminals_.begin(), terminals_.end(), v,
                               [](const Terminal& t, NodeId x) { return t.node < x; });
    if (it == terminals_.end() || it->node != v) return -1;
    return static_cast<int>(it - terminals_.begin());
  }
  bool is_terminal(NodeId v) const { return terminal_index(v) >= 0; }

  double demand_of(NodeId v) const {
    int i = terminal_index(v);
    return i < 0 ? 0.0 : terminals_[i].demand;
  }

  double max_demand() const {
    double m = 0.0;
    for (const Terminal& t : terminals_) m = std::max(m, t.demand);
    return m;
  }

  /// Source plus all terminals.
  bool is_required(NodeId v) const { return v == source_ || is_terminal(v); }

 private:
  Graph graph_;
  NodeId source_ = 0;
  std::vector<Terminal> terminals_;
};

/// Feasibility of the routing request. An empty list means every terminal
/// can be reached from the source, so a flow network exists.
inline std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> report;
  const auto seen = inst.graph().reachable_from(inst.source());
  for (const Terminal& t : inst.terminals()) {
    if (!seen[t.node]) {
      report.push_back("terminal " + std::to_string(t.node) + " unreachable from source");
    }
  }
  return report;
}

/// Thrown by solvers on an instance whose validation report is non-empty.
class InfeasibleInstance : public std::runtime_error {
 public:
  explicit InfeasibleInstance(std::vector<std::string> report)
      : std::runtime_error(join(report)), report_(std::move(report)) {}
  const std::vector<std::string>& report() const { return report_; }

 private:
  static std::string join(const std::vector<std::string>& lines) {
    std::string out = "infeasible instance";
    for (const auto& l : lines) out += "; " + l;
    return out;
  }
  std::vector<std::string> report_;
};

inline void require_feasible(const Instance& inst) {
  auto report = validate_instance(inst);
  if (!report.empty()) throw InfeasibleInstance(std::move(report));
}

/// Copy of `inst` with every demand replaced through `fn(terminal)`.
template <typename Fn>
Instance with_demands(const Instance& inst, Fn&& fn) {
  std::vector<Terminal> ts(inst.terminals().begin(), inst.terminals().end());
  for (Terminal& t : ts) t.demand = fn(t);
  return Instance(inst.graph(), inst.source(), std::move(ts));
}

}  // namespace ost

#endif  // OST_GRAPH_HPP_
