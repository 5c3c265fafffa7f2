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

// Exact on-demand Steiner tree (OST) solver.
//
// H(v, S) is the least total weighted flow of a network that delivers every
// terminal in S its demand starting from node v. The table is filled subset
// by subset, in order of increasing size and then increasing mask value:
//
//   boundary  H(d, {d}) = 0 for every terminal d, everything else +inf;
//   merge     H(v, S) <- cost of T(v, F) u T(v, S\F), where the two
//             networks are materialized and a link used by both carries
//             the larger of its two flows;
//   grow      H(v, S) <- H(u, S) + xmax(S) * w(v, u) over links (v, u),
//             xmax(S) being the largest demand in S. Solved to its least
//             fixed point with a best-first label-setting pass seeded by
//             every finite H(., S).
//
// Only the decision behind each entry is stored; networks are rebuilt from
// decisions when a merge candidate or the final answer needs them.
// Replacement requires strict improvement, so the earliest decision wins
// ties.
//
// Time is O(M 3^K + 2^K E log M) candidate evaluations, memory O(M 2^K)
// for M nodes, E links and K terminals.

#ifndef OST_OST_DP_HPP_
#define OST_OST_DP_HPP_

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ost/flow_solution.hpp"
#include "ost/graph.hpp"

namespace ost {

using TerminalMask = std::uint32_t;

/// Unreached-state sentinel. Guarded before every addition.
inline constexpr double kUnreached = std::numeric_limits<double>::infinity();

/// Largest terminal count the table layout accepts.
inline constexpr int kMaxDpTerminals = 24;

struct DpDecision {
  enum class Kind : std::uint8_t { kNone, kLeafTerminal, kMerge, kExtend };
  Kind kind = Kind::kNone;
  std::uint32_t arg = 0;  // kMerge: submask F; kExtend: neighbor node
  EdgeId edge = -1;       // kExtend: the link to the neighbor

  static DpDecision leaf() { return {Kind::kLeafTerminal, 0, -1}; }
  static DpDecision merge(TerminalMask f) { return {Kind::kMerge, f, -1}; }
  static DpDecision extend(NodeId u, EdgeId e) {
    return {Kind::kExtend, static_cast<std::uint32_t>(u), e};
  }
};

/// H(v, S) and its decisions, subset-major: entries of one subset are
/// contiguous. Bit i of a mask is inst.terminals()[i].
class DpTable {
 public:
  DpTable() = default;

  explicit DpTable(const Instance& inst)
      : nodes_(inst.graph().node_count()), terminals_(inst.terminal_count()) {
    if (terminals_ > kMaxDpTerminals) {
      throw std::length_error("too many terminals for the subset table (" +
                              std::to_string(terminals_) + " > " +
                              std::to_string(kMaxDpTerminals) + ")");
    }
    const std::size_t subsets = std::size_t{1} << terminals_;
    cost_.assign(subsets * nodes_, kUnreached);
    decision_.assign(subsets * nodes_, DpDecision{});
    max_demand_.assign(subsets, 0.0);
    for (TerminalMask s = 1; s < subsets; ++s) {
      const int low = std::countr_zero(s);
      max_demand_[s] = std::max(max_demand_[s & (s - 1)], inst.terminals()[low].demand);
    }
  }

  int node_count() const { return nodes_; }
  int terminal_count() const { return terminals_; }
  TerminalMask full_mask() const { return (TerminalMask{1} << terminals_) - 1; }

  double cost(NodeId v, TerminalMask s) const { return cost_[index(v, s)]; }
  const DpDecision& decision(NodeId v, TerminalMask s) const { return decision_[index(v, s)]; }
  double max_demand(TerminalMask s) const { return max_demand_[s]; }

  void set(NodeId v, TerminalMask s, double c, DpDecision d) {
    cost_[index(v, s)] = c;
    decision_[index(v, s)] = d;
  }

 private:
  std::size_t index(NodeId v, TerminalMask s) const {
    return static_cast<std::size_t>(s) * nodes_ + v;
  }

  int nodes_ = 0;
  int terminals_ = 0;
  std::vector<double> cost_;
  std::vector<DpDecision> decision_;
  std::vector<double> max_demand_;
};

namespace detail {

struct FlowItem {
  NodeId from;
  NodeId to;
  double flow;
  double weight;
};

/// Appends the (uncombined) links of T(v, S) to `out`.
inline void collect_links(const DpTable& table, const Instance& inst, NodeId v, TerminalMask s,
                          std::vector<FlowItem>& out,
                          std::vector<std::pair<NodeId, TerminalMask>>& stack) {
  stack.clear();
  stack.emplace_back(v, s);
  while (!stack.empty()) {
    auto [node, mask] = stack.back();
    stack.pop_back();
    const DpDecision& d = table.decision(node, mask);
    switch (d.kind) {
      case DpDecision::Kind::kLeafTerminal:
        break;
      case DpDecision::Kind::kMerge:
        stack.emplace_back(node, d.arg);
        stack.emplace_back(node, mask ^ d.arg);
        break;
      case DpDecision::Kind::kExtend: {
        const auto next = static_cast<NodeId>(d.arg);
        out.push_back({node, next, table.max_demand(mask), inst.graph().edge(d.edge).weight});
        stack.emplace_back(next, mask);
        break;
      }
      case DpDecision::Kind::kNone:
        throw std::logic_error("unreachable state");
    }
  }
}

/// Sorts by (from, to), keeps the larger flow of duplicate links and returns
/// sum(weight * flow). `items` is left combined.
inline double combine_links(std::vector<FlowItem>& items) {
  std::sort(items.begin(), items.end(), [](const FlowItem& a, const FlowItem& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (out > 0 && items[out - 1].from == items[i].from && items[out - 1].to == items[i].to) {
      items[out - 1].flow = std::max(items[out - 1].flow, items[i].flow);
    } else {
      items[out++] = items[i];
    }
  }
  items.resize(out);
  double cost = 0.0;
  for (const FlowItem& it : items) cost += it.weight * it.flow;
  return cost;
}

struct MergeScratch {
  std::vector<FlowItem> items;
  std::vector<std::pair<NodeId, TerminalMask>> stack;
};

}  // namespace detail

/// Boundary conditions: H(d, {d}) = 0 for every terminal, +inf elsewhere.
inline DpTable dp_init(const Instance& inst) {
  DpTable table(inst);
  for (int i = 0; i < inst.terminal_count(); ++i) {
    table.set(inst.terminals()[i].node, TerminalMask{1} << i, 0.0, DpDecision::leaf());
  }
  return table;
}

/// Merge transition for subset `s` at every node. Every unordered split
/// {F, S\F} is visited once, as the submask F that holds the lowest bit of
/// S, in decreasing numeric order of F.
inline void dp_merge(DpTable& table, const Instance& inst, TerminalMask s,
                     detail::MergeScratch& scratch) {
  if (std::popcount(s) < 2) return;
  const TerminalMask low = s & (~s + 1);
  const TerminalMask rest_bits = s ^ low;
  for (NodeId v = 0; v < table.node_count(); ++v) {
    double best = table.cost(v, s);
    DpDecision choice = table.decision(v, s);
    // F = low | sub for every proper submask sub of rest_bits.
    for (TerminalMask sub = (rest_bits - 1) & rest_bits;; sub = (sub - 1) & rest_bits) {
      const TerminalMask f = low | sub;
      const double a = table.cost(v, f);
      const double b = table.cost(v, s ^ f);
      // A union is never cheaper than its larger part.
      if (std::isfinite(a) && std::isfinite(b) && std::max(a, b) < best) {
        scratch.items.clear();
        detail::collect_links(table, inst, v, f, scratch.items, scratch.stack);
        detail::collect_links(table, inst, v, s ^ f, scratch.items, scratch.stack);
        const double c = detail::combine_links(scratch.items);
        if (c < best) {
          best = c;
          choice = DpDecision::merge(f);
        }
      }
      if (sub == 0) break;
    }
    table.set(v, s, best, choice);
  }
}

inline void dp_merge(DpTable& table, const Instance& inst, TerminalMask s) {
  detail::MergeScratch scratch;
  dp_merge(table, inst, s, scratch);
}

/// Grow transition for subset `s`: least fixed point of
/// H(v,S) = min(H(v,S), H(u,S) + xmax(S) * w(v,u)).
inline void dp_grow(DpTable& table, const Instance& inst, TerminalMask s) {
  using Entry = std::pair<double, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  for (NodeId v = 0; v < table.node_count(); ++v) {
    if (std::isfinite(table.cost(v, s))) open.emplace(table.cost(v, s), v);
  }
  const double scale = table.max_demand(s);
  const Graph& g = inst.graph();
  while (!open.empty()) {
    auto [c, u] = open.top();
    open.pop();
    if (c > table.cost(u, s)) continue;
    for (const Graph::Arc& arc : g.neighbors(u)) {
      const double candidate = c + scale * arc.weight;
      if (candidate < table.cost(arc.to, s)) {
        table.set(arc.to, s, candidate, DpDecision::extend(u, arc.edge));
        open.emplace(candidate, arc.to);
      }
    }
  }
}

/// Rebuilds T(v, S) as a flow network. Links point away from v.
inline FlowSolution reconstruct(const DpTable& table, const Instance& inst, NodeId v,
                                TerminalMask s) {
  if (s == 0 || !std::isfinite(table.cost(v, s))) throw std::logic_error("unreachable state");
  std::vector<detail::FlowItem> items;
  std::vector<std::pair<NodeId, TerminalMask>> stack;
  detail::collect_links(table, inst, v, s, items, stack);
  FlowSolution sol;
  sol.cost = detail::combine_links(items);
  for (const auto& it : items) sol.flows.emplace(DirectedEdge{it.from, it.to}, it.flow);
  sol.algorithm = "ost";
  return sol;
}

/// Fills the whole table for `inst`.
inline DpTable solve_dp(const Instance& inst) {
  DpTable table = dp_init(inst);
  const TerminalMask full = table.full_mask();
  std::vector<TerminalMask> order;
  order.reserve(full);
  for (TerminalMask s = 1; s <= full; ++s) order.push_back(s);
  std::stable_sort(order.begin(), order.end(), [](TerminalMask a, TerminalMask b) {
    return std::popcount(a) < std::popcount(b);
  });
  detail::MergeScratch scratch;
  for (TerminalMask s : order) {
    dp_merge(table, inst, s, scratch);
    dp_grow(table, inst, s);
  }
  return table;
}

/// Minimum-cost flow network for `inst`. Throws InfeasibleInstance when a
/// terminal cannot be reached.
inline FlowSolution solve_ost(const Instance& inst) {
  const auto start = std::chrono::steady_clock::now();
  require_feasible(inst);
  const DpTable table = solve_dp(inst);
  FlowSolution sol = reconstruct(table, inst, inst.source(), table.full_mask());
  sol.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return sol;
}

}  // namespace ost

#endif  // OST_OST_DP_HPP_
