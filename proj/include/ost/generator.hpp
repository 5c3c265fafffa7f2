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

// Seeded random instances.
//
// Topology is a uniform random labeled spanning tree (random Pruefer code)
// plus edges drawn uniformly among the absent pairs until the requested
// edge count is met, so every instance is connected. Weights are i.i.d.
// U(0,1), the source and terminals are a uniform sample without
// replacement, and demands are i.i.d. from a discrete distribution.
//
// Each aspect uses its own RNG stream derived from the seed. Consequently
// instances that differ only in terminal_count share topology and weights,
// and the smaller terminal set (with its demands) is a prefix of the larger.

#ifndef OST_GENERATOR_HPP_
#define OST_GENERATOR_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ost/graph.hpp"
#include "ost/rng.hpp"

namespace ost {

struct DemandLevel {
  double value = 1.0;
  double probability = 1.0;
};

/// {4K, 2K, 1K} resolution ratios, equally likely.
inline std::vector<DemandLevel> default_demand_set() {
  return {{1.0, 1.0 / 3.0}, {0.5, 1.0 / 3.0}, {0.25, 1.0 / 3.0}};
}

struct GenConfig {
  int node_count = 100;
  double avg_degree = 4.0;
  int terminal_count = 8;
  std::vector<DemandLevel> demand_set = default_demand_set();
  std::uint64_t seed = 0;
};

class GenConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// round(node_count * avg_degree / 2), half away from zero.
inline std::int64_t target_edge_count(const GenConfig& cfg) {
  return std::llround(static_cast<double>(cfg.node_count) * cfg.avg_degree / 2.0);
}

namespace detail {

enum GenStream : std::uint64_t { kTopology = 1, kWeights = 2, kSelection = 3, kDemands = 4 };

inline void check_common(const GenConfig& cfg) {
  if (cfg.node_count < 2) throw GenConfigError("node_count: must be at least 2");
  if (cfg.terminal_count < 1) throw GenConfigError("terminal_count: must be positive");
  if (cfg.terminal_count > cfg.node_count - 1) {
    throw GenConfigError("terminal_count: must be at most node_count - 1");
  }
  if (cfg.demand_set.empty()) throw GenConfigError("demand_set: must be non-empty");
  double total = 0.0;
  for (const DemandLevel& d : cfg.demand_set) {
    if (!(d.value > 0.0) || !std::isfinite(d.value)) {
      throw GenConfigError("demand_set: values must be finite and > 0");
    }
    if (!(d.probability >= 0.0 && d.probability <= 1.0)) {
      throw GenConfigError("demand_set: probabilities must lie in [0, 1]");
    }
    total += d.probability;
  }
  if (std::abs(total - 1.0) > 1e-9) throw GenConfigError("demand_set: probabilities must sum to 1");
}

/// Uniform random labeled tree on n >= 2 nodes from a random Pruefer code.
inline std::vector<std::pair<NodeId, NodeId>> random_tree(int n, Rng& rng) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  if (n == 2) {
    edges.emplace_back(0, 1);
    return edges;
  }
  std::vector<NodeId> code(n - 2);
  for (auto& c : code) c = static_cast<NodeId>(rng.below(n));
  std::vector<int> degree(n, 1);
  for (NodeId c : code) ++degree[c];
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> leaves;
  for (NodeId v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  for (NodeId c : code) {
    NodeId leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    if (--degree[c] == 1) leaves.push(c);
  }
  NodeId a = leaves.top();
  leaves.pop();
  NodeId b = leaves.top();
  edges.emplace_back(std::min(a, b), std::max(a, b));
  return edges;
}

/// Random source, terminals and demands on a fixed topology; weights drawn
/// in canonical (u, v) edge order.
inline Instance finish_instance(const GenConfig& cfg, std::vector<std::pair<NodeId, NodeId>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  Rng weight_rng(cfg.seed, kWeights);
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v, weight_rng.uniform01()});
  Graph graph(cfg.node_count, std::move(edges));

  // Partial Fisher-Yates: slot 0 is the source, slots 1..K the terminals.
  Rng select_rng(cfg.seed, kSelection);
  std::vector<NodeId> nodes(cfg.node_count);
  std::iota(nodes.begin(), nodes.end(), 0);
  for (int i = 0; i <= cfg.terminal_count; ++i) {
    auto j = i + static_cast<int>(select_rng.below(cfg.node_count - i));
    std::swap(nodes[i], nodes[j]);
  }
  Rng demand_rng(cfg.seed, kDemands);
  std::vector<Terminal> terminals;
  for (int i = 1; i <= cfg.terminal_count; ++i) {
    const double r = demand_rng.uniform01();
    double acc = 0.0;
    double value = cfg.demand_set.back().value;
    for (const DemandLevel& d : cfg.demand_set) {
      acc += d.probability;
      if (r < acc) {
        value = d.value;
        break;
      }
    }
    terminals.push_back({nodes[i], value});
  }
  return Instance(std::move(graph), nodes[0], std::move(terminals));
}

}  // namespace detail

inline Instance generate_instance(const GenConfig& cfg) {
  detail::check_common(cfg);
  const std::int64_t n = cfg.node_count;
  const std::int64_t target = target_edge_count(cfg);
  const std::int64_t max_edges = n * (n - 1) / 2;
  if (!(cfg.avg_degree > 0.0)) throw GenConfigError("avg_degree: must be positive");
  if (target < n - 1) {
    throw GenConfigError("avg_degree: requested " + std::to_string(target) +
                         " edges, fewer than node_count - 1; cannot guarantee connectivity");
  }
  if (target > max_edges) {
    throw GenConfigError("avg_degree: requested " + std::to_string(target) +
                         " edges, more than a simple graph on node_count nodes has");
  }

  Rng rng(cfg.seed, detail::kTopology);
  auto pairs = detail::random_tree(cfg.node_count, rng);
  const std::int64_t extra = target - (n - 1);
  auto key = [n](NodeId u, NodeId v) { return static_cast<std::int64_t>(u) * n + v; };
  std::unordered_set<std::int64_t> present;
  for (auto [u, v] : pairs) present.insert(key(u, v));

  if (extra > 0 && 2 * target <= max_edges) {
    // Sparse: rejection sampling over all pairs.
    std::int64_t added = 0;
    while (added < extra) {
      auto u = static_cast<NodeId>(rng.below(n));
      auto v = static_cast<NodeId>(rng.below(n));
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (present.insert(key(u, v)).second) {
        pairs.emplace_back(u, v);
        ++added;
      }
    }
  } else if (extra > 0) {
    // Dense: partial shuffle of the explicit absent-pair list.
    std::vector<std::pair<NodeId, NodeId>> absent;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (!present.count(key(u, v))) absent.emplace_back(u, v);
      }
    }
    for (std::int64_t i = 0; i < extra; ++i) {
      auto j = i + static_cast<std::int64_t>(rng.below(absent.size() - i));
      std::swap(absent[i], absent[j]);
      pairs.push_back(absent[i]);
    }
  }
  return detail::finish_instance(cfg, std::move(pairs));
}

/// Connected random `degree`-regular topology (Steger-Wormald pairing with
/// restarts); cfg.avg_degree is ignored. Weights and terminals as in
/// generate_instance.
inline Instance generate_regular_instance(const GenConfig& cfg, int degree) {
  detail::check_common(cfg);
  const int n = cfg.node_count;
  if (degree < 1 || degree > n - 1) throw GenConfigError("degree: must lie in [1, node_count - 1]");
  if ((static_cast<std::int64_t>(n) * degree) % 2 != 0) {
    throw GenConfigError("degree: node_count * degree must be even");
  }
  if (degree == 1 && n > 2) throw GenConfigError("degree: a 1-regular graph is disconnected");

  Rng rng(cfg.seed, detail::kTopology);
  constexpr int kMaxAttempts = 10000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<NodeId> points;
    points.reserve(static_cast<std::size_t>(n) * degree);
    for (NodeId v = 0; v < n; ++v) {
      for (int k = 0; k < degree; ++k) points.push_back(v);
    }
    std::set<std::pair<NodeId, NodeId>> edges;
    bool stuck = false;
    while (!points.empty() && !stuck) {
      bool paired = false;
      // Draw random point pairs; fall back to a scan when draws keep failing.
      for (int tries = 0; tries < 64 && !paired; ++tries) {
        auto i = rng.below(points.size());
        auto j = rng.below(points.size());
        NodeId a = points[i], b = points[j];
        if (i == j || a == b || edges.count({std::min(a, b), std::max(a, b)})) continue;
        edges.emplace(std::min(a, b), std::max(a, b));
        if (i < j) std::swap(i, j);
        points[i] = points.back();
        points.pop_back();
        points[j] = points.back();
        points.pop_back();
        paired = true;
      }
      if (!paired) {
        bool any = false;
        for (std::size_t i = 0; i < points.size() && !any; ++i) {
          for (std::size_t j = i + 1; j < points.size() && !any; ++j) {
            NodeId a = points[i], b = points[j];
            if (a != b && !edges.count({std::min(a, b), std::max(a, b)})) any = true;
          }
        }
        stuck = !any;
      }
    }
    if (stuck) continue;
    std::vector<std::pair<NodeId, NodeId>> pairs(edges.begin(), edges.end());
    std::vector<Edge> probe;
    for (auto [u, v] : pairs) probe.push_back({u, v, 1.0});
    if (!Graph(n, std::move(probe)).is_connected()) continue;
    return detail::finish_instance(cfg, std::move(pairs));
  }
  throw GenConfigError("degree: failed to generate a connected regular graph");
}

}  // namespace ost

#endif  // OST_GENERATOR_HPP_
