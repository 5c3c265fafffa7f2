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

#ifndef OST_FLOW_SOLUTION_HPP_
#define OST_FLOW_SOLUTION_HPP_

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ost/graph.hpp"

namespace ost {

/// Absolute tolerance for every flow and cost comparison.
inline constexpr double kTolerance = 1e-9;

struct DirectedEdge {
  NodeId from = 0;
  NodeId to = 0;
  auto operator<=>(const DirectedEdge&) const = default;
};

/// Flow network delivering the source stream. Edges are oriented from the
/// source side toward the terminals; zero-flow edges are never stored.
struct FlowSolution {
  std::map<DirectedEdge, double> flows;
  double cost = 0.0;
  std::string algorithm;
  double runtime_ms = 0.0;

  /// Undirected support as sorted (min, max) pairs.
  std::vector<std::pair<NodeId, NodeId>> edge_set() const {
    std::set<std::pair<NodeId, NodeId>> s;
    for (const auto& [e, f] : flows) s.emplace(std::min(e.from, e.to), std::max(e.from, e.to));
    return {s.begin(), s.end()};
  }
};

}  // namespace ost

#endif  // OST_FLOW_SOLUTION_HPP_
