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

// Comparison solvers. All return feasible flow trees rooted at the source.
//
//   mst  minimum spanning tree, pruned, every link at the largest demand
//   spt  union of per-terminal shortest paths, shared links carry the
//        largest demand routed over them
//   ga   genetic algorithm over Steiner-node inclusion genomes
//   aco  ant colony building one path per terminal
//   bco  bee colony over Steiner-node inclusion sites
//
// GA and BCO genomes are decoded by decode_node_subset: MST of the induced
// subgraph, non-required leaves pruned, subtree-maximum flows.

#ifndef OST_BASELINES_HPP_
#define OST_BASELINES_HPP_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ost/flow_solution.hpp"
#include "ost/graph.hpp"
#include "ost/rng.hpp"

namespace ost {

struct MetaheuristicParams {
  int population = 50;
  int iterations = 100;
  std::uint64_t seed = 0;
  // GA
  double crossover_rate = 0.8;
  double mutation_rate = 0.02;
  int tournament_size = 3;
  // ACO
  int ant_count = 20;
  double evaporation = 0.1;
  double pheromone_weight = 1.0;
  double heuristic_weight = 2.0;
  // BCO
  double scout_fraction = 0.1;
  int abandonment_limit = 10;

  void validate() const {
    auto fail = [](const std::string& m) { throw std::invalid_argument(m); };
    if (population < 1) fail("population: must be positive");
    if (iterations < 1) fail("iterations: must be positive");
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) fail("crossover_rate: must lie in [0, 1]");
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) fail("mutation_rate: must lie in [0, 1]");
    if (tournament_size < 1) fail("tournament_size: must be positive");
    if (ant_count < 1) fail("ant_count: must be positive");
    if (!(evaporation > 0.0 && evaporation < 1.0)) fail("evaporation: must lie in (0, 1)");
    if (!(pheromone_weight >= 0.0)) fail("pheromone_weight: must be >= 0");
    if (!(heuristic_weight >= 0.0)) fail("heuristic_weight: must be >= 0");
    if (!(scout_fraction >= 0.0 && scout_fraction <= 1.0)) fail("scout_fraction: must lie in [0, 1]");
    if (abandonment_limit < 1) fail("abandonment_limit: must be positive");
  }
};

namespace detail {

using NodePair = std::pair<NodeId, NodeId>;

inline NodePair ordered(NodeId a, NodeId b) { return {std::min(a, b), std::max(a, b)}; }

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

/// Kruskal over the links whose endpoints both pass `keep`; ties by (u, v).
inline std::vector<NodePair> kruskal(const Graph& g, const std::vector<bool>& keep) {
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (keep[g.edge(e).u] && keep[g.edge(e).v]) ids.push_back(e);
  }
  std::sort(ids.begin(), ids.end(), [&](EdgeId a, EdgeId b) {
    const Edge& x = g.edge(a);
    const Edge& y = g.edge(b);
    if (x.weight != y.weight) return x.weight < y.weight;
    return ordered(x.u, x.v) < ordered(y.u, y.v);
  });
  std::vector<NodeId> parent(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) parent[v] = v;
  auto find = [&](NodeId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<NodePair> tree;
  for (EdgeId e : ids) {
    NodeId a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a == b) continue;
    parent[a] = b;
    tree.push_back(ordered(g.edge(e).u, g.edge(e).v));
  }
  return tree;
}

/// Turns an acyclic link set into a flow tree: keeps the source's
/// component, prunes leaves that are neither source nor terminal, orients
/// links away from the source and sets each flow to the largest demand
/// below it (or to `uniform_flow` on every link when given). Returns
/// nullopt when some terminal is not in the source's component.
inline std::optional<FlowSolution> tree_solution(const Instance& inst,
                                                 const std::vector<NodePair>& links,
                                                 std::optional<double> uniform_flow = {}) {
  const Graph& g = inst.graph();
  const int m = g.node_count();
  std::vector<std::vector<NodeId>> adj(m);
  for (auto [a, b] : links) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<NodeId> up(m, -1), order{inst.source()};
  up[inst.source()] = inst.source();
  for (std::size_t h = 0; h < order.size(); ++h) {
    for (NodeId w : adj[order[h]]) {
      if (up[w] < 0) {
        up[w] = order[h];
        order.push_back(w);
      }
    }
  }
  for (const Terminal& t : inst.terminals()) {
    if (up[t.node] < 0) return std::nullopt;
  }
  // A node is kept iff its subtree holds a terminal.
  std::vector<double> below(m, 0.0);
  std::vector<bool> useful(m, false);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    if (inst.is_terminal(v)) {
      useful[v] = true;
      below[v] = std::max(below[v], inst.demand_of(v));
    }
    if (v != inst.source() && useful[v]) {
      useful[up[v]] = true;
      below[up[v]] = std::max(below[up[v]], below[v]);
    }
  }
  FlowSolution sol;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const NodeId v = order[i];
    if (!useful[v]) continue;
    const double f = uniform_flow ? *uniform_flow : below[v];
    sol.flows.emplace(DirectedEdge{up[v], v}, f);
    sol.cost += *g.weight(up[v], v) * f;
  }
  return sol;
}

inline std::vector<double> dijkstra(const Graph& g, NodeId from) {
  std::vector<double> dist(g.node_count(), std::numeric_limits<double>::infinity());
  using Entry = std::pair<double, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  dist[from] = 0.0;
  open.emplace(0.0, from);
  while (!open.empty()) {
    auto [d, u] = open.top();
    open.pop();
    if (d > dist[u]) continue;
    for (const Graph::Arc& a : g.neighbors(u)) {
      if (d + a.weight < dist[a.to]) {
        dist[a.to] = d + a.weight;
        open.emplace(dist[a.to], a.to);
      }
    }
  }
  return dist;
}

/// Lexicographically smallest node sequence among the shortest source->t
/// paths, given distances from the source and from t.
inline std::vector<NodeId> lexicographic_shortest_path(const Graph& g, NodeId source, NodeId t,
                                                       const std::vector<double>& from_source,
                                                       const std::vector<double>& to_target) {
  const double total = from_source[t];
  const double eps = 1e-12 * std::max(1.0, total);
  std::vector<NodeId> path{source};
  std::vector<bool> used(g.node_count(), false);
  used[source] = true;
  NodeId x = source;
  while (x != t) {
    NodeId next = -1;
    for (const Graph::Arc& a : g.neighbors(x)) {  // sorted by neighbor id
      if (used[a.to]) continue;
      if (std::abs(from_source[x] + a.weight + to_target[a.to] - total) <= eps &&
          std::abs(from_source[x] + a.weight - from_source[a.to]) <= eps) {
        next = a.to;
        break;
      }
    }
    if (next < 0) throw std::logic_error("shortest path walk lost the path");
    used[next] = true;
    path.push_back(next);
    x = next;
  }
  return path;
}

/// Removes cycles from a path union. For each cycle found, the link whose
/// removal leaves the cheapest network (largest weight * union flow) is
/// dropped; removing one cycle link never disconnects anything.
inline std::vector<NodePair> break_cycles(const Graph& g, std::map<NodePair, double> flow) {
  while (true) {
    std::vector<NodeId> parent(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) parent[v] = v;
    auto find = [&](NodeId v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::vector<std::vector<NodeId>> forest(g.node_count());
    std::optional<NodePair> closing;
    for (const auto& [p, f] : flow) {
      NodeId a = find(p.first), b = find(p.second);
      if (a == b) {
        closing = p;
        break;
      }
      parent[a] = b;
      forest[p.first].push_back(p.second);
      forest[p.second].push_back(p.first);
    }
    if (!closing) break;

    // Cycle = closing link + forest path between its endpoints.
    std::vector<NodeId> prev(g.node_count(), -1), queue{closing->first};
    prev[closing->first] = closing->first;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (NodeId w : forest[queue[h]]) {
        if (prev[w] < 0) {
          prev[w] = queue[h];
          queue.push_back(w);
        }
      }
    }
    std::vector<NodePair> cycle{*closing};
    for (NodeId w = closing->second; w != closing->first; w = prev[w]) {
      cycle.push_back(ordered(w, prev[w]));
    }
    NodePair drop = cycle.front();
    double drop_value = -1.0;
    for (const NodePair& p : cycle) {
      const double value = *g.weight(p.first, p.second) * flow.at(p);
      if (value > drop_value || (value == drop_value && p < drop)) {
        drop = p;
        drop_value = value;
      }
    }
    flow.erase(drop);
  }
  std::vector<NodePair> links;
  for (const auto& [p, f] : flow) links.push_back(p);
  return links;
}

/// Union of per-terminal source->terminal paths into a flow tree.
inline FlowSolution merge_paths(const Instance& inst,
                                const std::vector<std::vector<NodeId>>& paths) {
  std::map<NodePair, double> flow;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const double x = inst.terminals()[i].demand;
    for (std::size_t k = 1; k < paths[i].size(); ++k) {
      double& f = flow[ordered(paths[i][k - 1], paths[i][k])];
      f = std::max(f, x);
    }
  }
  auto links = break_cycles(inst.graph(), std::move(flow));
  auto sol = tree_solution(inst, links);
  if (!sol) throw std::logic_error("path union lost a terminal");
  return *sol;
}

constexpr double kInfeasiblePenalty = 1e18;

/// Steiner-node inclusion genome over the non-required nodes.
struct NodeGenome {
  std::vector<NodeId> free_nodes;  // genome bit i <-> free_nodes[i]

  explicit NodeGenome(const Instance& inst) {
    for (NodeId v = 0; v < inst.graph().node_count(); ++v) {
      if (!inst.is_required(v)) free_nodes.push_back(v);
    }
  }
  std::size_t size() const { return free_nodes.size(); }

  std::vector<bool> selection(const Instance& inst, const std::vector<bool>& bits) const {
    std::vector<bool> sel(inst.graph().node_count(), false);
    sel[inst.source()] = true;
    for (const Terminal& t : inst.terminals()) sel[t.node] = true;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i]) sel[free_nodes[i]] = true;
    }
    return sel;
  }

  std::vector<bool> random_bits(Rng& rng) const {
    std::vector<bool> bits(size());
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = rng.bernoulli(0.5);
    return bits;
  }
};

struct Scored {
  std::vector<bool> bits;
  double fitness = kInfeasiblePenalty;
};

}  // namespace detail

inline FlowSolution solve_mst_prune(const Instance& inst) {
  const auto start = std::chrono::steady_clock::now();
  require_feasible(inst);
  const std::vector<bool> all(inst.graph().node_count(), true);
  auto sol = detail::tree_solution(inst, detail::kruskal(inst.graph(), all), inst.max_demand());
  if (!sol) throw std::invalid_argument("graph is disconnected");
  sol->algorithm = "mst";
  sol->runtime_ms = detail::elapsed_ms(start);
  return *sol;
}

inline FlowSolution solve_sp_union(const Instance& inst) {
  const auto start = std::chrono::steady_clock::now();
  require_feasible(inst);
  const Graph& g = inst.graph();
  const auto from_source = detail::dijkstra(g, inst.source());
  std::vector<std::vector<NodeId>> paths;
  for (const Terminal& t : inst.terminals()) {
    paths.push_back(detail::lexicographic_shortest_path(g, inst.source(), t.node, from_source,
                                                        detail::dijkstra(g, t.node)));
  }
  FlowSolution sol = detail::merge_paths(inst, paths);
  sol.algorithm = "spt";
  sol.runtime_ms = detail::elapsed_ms(start);
  return sol;
}

/// Decodes a node subset (which must contain the source and all terminals)
/// into a flow tree, or nullopt when the induced subgraph does not connect
/// them. Induced components without required nodes are ignored.
inline std::optional<FlowSolution> decode_node_subset(const Instance& inst,
                                                      const std::vector<bool>& selected) {
  if (static_cast<int>(selected.size()) != inst.graph().node_count()) {
    throw std::invalid_argument("selection size differs from node count");
  }
  if (!selected[inst.source()]) throw std::invalid_argument("selection misses the source");
  for (const Terminal& t : inst.terminals()) {
    if (!selected[t.node]) throw std::invalid_argument("selection misses a terminal");
  }
  auto sol = detail::tree_solution(inst, detail::kruskal(inst.graph(), selected));
  if (sol) sol->algorithm = "decode";
  return sol;
}

inline FlowSolution solve_ga(const Instance& inst, const MetaheuristicParams& p) {
  const auto start = std::chrono::steady_clock::now();
  p.validate();
  require_feasible(inst);
  const detail::NodeGenome genome(inst);
  Rng rng(p.seed);

  std::optional<FlowSolution> best;
  auto evaluate = [&](std::vector<bool> bits) {
    detail::Scored s{std::move(bits), detail::kInfeasiblePenalty};
    if (auto sol = decode_node_subset(inst, genome.selection(inst, s.bits))) {
      s.fitness = sol->cost;
      if (!best || sol->cost < best->cost) best = std::move(sol);
    }
    return s;
  };

  std::vector<detail::Scored> pop;
  pop.push_back(evaluate(std::vector<bool>(genome.size(), true)));
  while (static_cast<int>(pop.size()) < p.population) pop.push_back(evaluate(genome.random_bits(rng)));

  auto tournament = [&]() -> const detail::Scored& {
    std::size_t winner = rng.below(pop.size());
    for (int k = 1; k < p.tournament_size; ++k) {
      std::size_t c = rng.below(pop.size());
      if (pop[c].fitness < pop[winner].fitness) winner = c;
    }
    return pop[winner];
  };

  for (int gen = 0; gen < p.iterations; ++gen) {
    std::vector<detail::Scored> next;
    next.reserve(pop.size());
    next.push_back(*std::min_element(pop.begin(), pop.end(), [](const auto& a, const auto& b) {
      return a.fitness < b.fitness;
    }));
    while (next.size() < pop.size()) {
      const auto& mom = tournament();
      const auto& dad = tournament();
      std::vector<bool> child = mom.bits;
      if (rng.bernoulli(p.crossover_rate)) {
        for (std::size_t i = 0; i < child.size(); ++i) {
          if (rng.bernoulli(0.5)) child[i] = dad.bits[i];
        }
      }
      for (std::size_t i = 0; i < child.size(); ++i) {
        if (rng.bernoulli(p.mutation_rate)) child[i] = !child[i];
      }
      next.push_back(evaluate(std::move(child)));
    }
    pop = std::move(next);
  }

  best->algorithm = "ga";
  best->runtime_ms = detail::elapsed_ms(start);
  return *best;
}

inline FlowSolution solve_aco(const Instance& inst, const MetaheuristicParams& p) {
  const auto start = std::chrono::steady_clock::now();
  p.validate();
  require_feasible(inst);
  const Graph& g = inst.graph();
  Rng rng(p.seed);

  const auto from_source = detail::dijkstra(g, inst.source());
  std::vector<std::vector<double>> to_target;
  std::vector<std::vector<NodeId>> fallback;
  for (const Terminal& t : inst.terminals()) {
    to_target.push_back(detail::dijkstra(g, t.node));
    fallback.push_back(detail::lexicographic_shortest_path(g, inst.source(), t.node, from_source,
                                                           to_target.back()));
  }

  std::vector<double> pheromone(g.edge_count(), 1.0);
  std::optional<FlowSolution> best;
  std::vector<bool> visited(g.node_count());
  std::vector<double> weights;

  // One ant walk toward terminal k without revisiting nodes; the desirability
  // of a hop is pheromone^alpha * (1 / (w + remaining distance))^beta.
  auto walk = [&](std::size_t k) -> std::optional<std::vector<NodeId>> {
    const NodeId target = inst.terminals()[k].node;
    std::fill(visited.begin(), visited.end(), false);
    std::vector<NodeId> path{inst.source()};
    visited[inst.source()] = true;
    while (path.back() != target) {
      const auto arcs = g.neighbors(path.back());
      weights.assign(arcs.size(), 0.0);
      double total = 0.0;
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (visited[arcs[i].to] || !std::isfinite(to_target[k][arcs[i].to])) continue;
        const double eta = 1.0 / (arcs[i].weight + to_target[k][arcs[i].to] + 1e-12);
        weights[i] = std::pow(pheromone[arcs[i].edge], p.pheromone_weight) *
                     std::pow(eta, p.heuristic_weight);
        total += weights[i];
      }
      if (!(total > 0.0)) return std::nullopt;
      double r = rng.uniform01() * total;
      std::size_t pick = arcs.size();
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (weights[i] <= 0.0) continue;
        pick = i;
        if (r < weights[i]) break;
        r -= weights[i];
      }
      visited[arcs[pick].to] = true;
      path.push_back(arcs[pick].to);
    }
    return path;
  };

  for (int iter = 0; iter < p.iterations; ++iter) {
    for (int ant = 0; ant < p.ant_count; ++ant) {
      std::vector<std::vector<NodeId>> paths;
      for (std::size_t k = 0; k < inst.terminals().size(); ++k) {
        std::optional<std::vector<NodeId>> path;
        for (int attempt = 0; attempt < 3 && !path; ++attempt) path = walk(k);
        paths.push_back(path ? std::move(*path) : fallback[k]);
      }
      FlowSolution sol = detail::merge_paths(inst, paths);
      if (!best || sol.cost < best->cost) best = std::move(sol);
    }
    for (double& t : pheromone) t *= 1.0 - p.evaporation;
    const double deposit = best->cost > 0.0 ? 1.0 / best->cost : 1.0;
    for (const auto& [e, f] : best->flows) pheromone[*g.find_edge(e.from, e.to)] += deposit;
  }

  best->algorithm = "aco";
  best->runtime_ms = detail::elapsed_ms(start);
  return *best;
}

inline FlowSolution solve_bco(const Instance& inst, const MetaheuristicParams& p) {
  const auto start = std::chrono::steady_clock::now();
  p.validate();
  require_feasible(inst);
  const detail::NodeGenome genome(inst);
  Rng rng(p.seed);

  std::optional<FlowSolution> best;
  auto evaluate = [&](std::vector<bool> bits) {
    detail::Scored s{std::move(bits), detail::kInfeasiblePenalty};
    if (auto sol = decode_node_subset(inst, genome.selection(inst, s.bits))) {
      s.fitness = sol->cost;
      if (!best || sol->cost < best->cost) best = std::move(sol);
    }
    return s;
  };

  std::vector<detail::Scored> sites;
  std::vector<int> stale;
  sites.push_back(evaluate(std::vector<bool>(genome.size(), true)));
  while (static_cast<int>(sites.size()) < p.population) sites.push_back(evaluate(genome.random_bits(rng)));
  stale.assign(sites.size(), 0);

  // Flip one inclusion bit; keep the neighbor on strict improvement.
  auto explore = [&](std::size_t i) {
    if (genome.size() == 0) {
      ++stale[i];
      return;
    }
    std::vector<bool> bits = sites[i].bits;
    const std::size_t b = rng.below(bits.size());
    bits[b] = !bits[b];
    detail::Scored cand = evaluate(std::move(bits));
    if (cand.fitness < sites[i].fitness) {
      sites[i] = std::move(cand);
      stale[i] = 0;
    } else {
      ++stale[i];
    }
  };

  const int scouts = std::max(1, static_cast<int>(std::ceil(p.scout_fraction * p.population)));
  for (int iter = 0; iter < p.iterations; ++iter) {
    for (std::size_t i = 0; i < sites.size(); ++i) explore(i);

    // Onlookers pick sites with probability proportional to 1 / cost.
    std::vector<double> appeal(sites.size());
    double total = 0.0;
    for (std::size_t i = 0; i < sites.size(); ++i) {
      appeal[i] = sites[i].fitness < detail::kInfeasiblePenalty
                      ? 1.0 / std::max(sites[i].fitness, 1e-12)
                      : 0.0;
      total += appeal[i];
    }
    for (std::size_t k = 0; k < sites.size(); ++k) {
      std::size_t pick = 0;
      if (total > 0.0) {
        double r = rng.uniform01() * total;
        for (pick = 0; pick + 1 < sites.size(); ++pick) {
          if (r < appeal[pick]) break;
          r -= appeal[pick];
        }
      } else {
        pick = rng.below(sites.size());
      }
      explore(pick);
    }

    std::vector<std::size_t> abandoned;
    for (std::size_t i = 0; i < sites.size(); ++i) {
      if (stale[i] > p.abandonment_limit) abandoned.push_back(i);
    }
    std::stable_sort(abandoned.begin(), abandoned.end(),
                     [&](std::size_t a, std::size_t b) { return stale[a] > stale[b]; });
    for (int k = 0; k < scouts && k < static_cast<int>(abandoned.size()); ++k) {
      sites[abandoned[k]] = evaluate(genome.random_bits(rng));
      stale[abandoned[k]] = 0;
    }
  }

  best->algorithm = "bco";
  best->runtime_ms = detail::elapsed_ms(start);
  return *best;
}

}  // namespace ost

#endif  // OST_BASELINES_HPP_
