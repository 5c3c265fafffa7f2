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

#include "ost/baselines.hpp"

#include <gtest/gtest.h>

#include "ost/oracle.hpp"
#include "ost/ost_dp.hpp"
#include "ost/solvers.hpp"
#include "ost/validate.hpp"
#include "test_support.hpp"

namespace ost {
namespace {

using testing::w1;
using Flows = std::map<DirectedEdge, double>;

MetaheuristicParams quick_params(std::uint64_t seed) {
  MetaheuristicParams p;
  p.population = 20;
  p.iterations = 30;
  p.ant_count = 10;
  p.seed = seed;
  return p;
}

TEST(MstPruneTest, WorkedInstanceUsesUniformMaxFlow) {
  const FlowSolution sol = solve_mst_prune(w1());
  EXPECT_NEAR(sol.cost, 0.5, 1e-12);
  EXPECT_EQ(sol.flows, (Flows{{{0, 3}, 1.0}, {{3, 1}, 1.0}, {{1, 2}, 1.0}}));
  EXPECT_EQ(sol.algorithm, "mst");
}

TEST(MstPruneTest, ChainIsThePath) {
  const FlowSolution sol = solve_mst_prune(testing::chain3());
  EXPECT_EQ(sol.flows, (Flows{{{0, 1}, 0.5}, {{1, 2}, 0.5}}));
}

TEST(MstPruneTest, SpurLeafPruned) {
  // Star around 0; node 3 is a cheap spur with no terminal.
  Instance inst(Graph(4, {{0, 1, 0.5}, {0, 2, 0.5}, {0, 3, 0.01}}), 0, {{1, 1.0}, {2, 0.5}});
  const FlowSolution sol = solve_mst_prune(inst);
  EXPECT_EQ(sol.flows, (Flows{{{0, 1}, 1.0}, {{0, 2}, 1.0}}));
  EXPECT_NEAR(sol.cost, 1.0, 1e-12);
}

TEST(SpUnionTest, WorkedInstance) {
  const FlowSolution sol = solve_sp_union(w1());
  EXPECT_NEAR(sol.cost, 0.35, 1e-12);
  EXPECT_EQ(sol.flows, testing::w1_optimum_flows());
  EXPECT_EQ(sol.algorithm, "spt");
}

TEST(SpUnionTest, SharedPrefixCarriesOneStream) {
  Instance inst(Graph(4, {{0, 1, 0.5}, {1, 2, 0.2}, {1, 3, 0.2}}), 0, {{2, 1.0}, {3, 0.25}});
  const FlowSolution sol = solve_sp_union(inst);
  EXPECT_EQ(sol.flows, (Flows{{{0, 1}, 1.0}, {{1, 2}, 1.0}, {{1, 3}, 0.25}}));
}

TEST(SpUnionTest, EqualsOstForSingleTerminal) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = testing::small_instance(seed, 25, 4.0, 1);
    EXPECT_NEAR(solve_sp_union(inst).cost, solve_ost(inst).cost, 1e-9);
  }
}

TEST(SpUnionTest, CyclicUnionBecomesTree) {
  // Shortest paths 0-1-3 and 0-2-4-3... built so the union has a cycle:
  // to 3 via 1, to 4 via 2, and 3-4 is cheap.
  Instance inst(Graph(5, {{0, 1, 0.3}, {1, 3, 0.3}, {0, 2, 0.3}, {2, 4, 0.3}, {3, 4, 0.59},
                          {1, 4, 0.9}}),
                0, {{3, 1.0}, {4, 0.5}});
  const FlowSolution sol = solve_sp_union(inst);
  EXPECT_TRUE(check_tree(inst, sol).ok()) << check_tree(inst, sol).to_text();
  EXPECT_TRUE(check_constraints(inst, sol).ok());
}

TEST(DecodeTest, Examples) {
  const auto all = decode_node_subset(w1(), {true, true, true, true});
  ASSERT_TRUE(all);
  EXPECT_NEAR(all->cost, 0.35, 1e-12);
  EXPECT_EQ(all->flows, testing::w1_optimum_flows());

  Instance split(Graph(4, {{0, 1, 0.5}, {1, 2, 0.5}, {0, 3, 0.5}}), 0, {{2, 1.0}});
  EXPECT_FALSE(decode_node_subset(split, {true, false, true, false}));
  const auto path = decode_node_subset(testing::chain3(), {true, true, true});
  ASSERT_TRUE(path);
  EXPECT_EQ(path->flows, (Flows{{{0, 1}, 0.5}, {{1, 2}, 0.5}}));
  EXPECT_THROW(decode_node_subset(w1(), {true, true, false, true}), std::invalid_argument);
}

TEST(DecodeTest, NoSingleDropBeatsAllNodesOnWorkedInstance) {
  // Dropping node 1 disconnects node 2; no other node is optional.
  EXPECT_FALSE(decode_node_subset(w1(), {true, false, true, true}));
}

TEST(MetaheuristicTest, WorkedInstance) {
  const MetaheuristicParams p;
  for (const auto* name : {"ga", "aco", "bco"}) {
    const FlowSolution sol = solve_with(name, w1(), p);
    EXPECT_LE(sol.cost, 0.5 + 1e-12) << name;
    EXPECT_NEAR(sol.cost, 0.35, 1e-12) << name;
    EXPECT_EQ(sol.algorithm, name);
  }
}

TEST(MetaheuristicTest, GaNoWorseThanRequiredOnly) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = testing::small_instance(seed, 15, 5.0, 6);
    std::vector<bool> req(inst.graph().node_count());
    for (NodeId v = 0; v < inst.graph().node_count(); ++v) req[v] = inst.is_required(v);
    const auto required_only = decode_node_subset(inst, req);
    if (!required_only) continue;
    EXPECT_LE(solve_ga(inst, quick_params(seed)).cost, required_only->cost + 1e-9);
  }
}

TEST(MetaheuristicTest, AcoGreedyLimitFindsShortestPath) {
  MetaheuristicParams p = quick_params(3);
  p.heuristic_weight = 40.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = testing::small_instance(seed, 20, 4.0, 1);
    EXPECT_NEAR(solve_aco(inst, p).cost, solve_sp_union(inst).cost, 1e-9) << "seed " << seed;
  }
}

TEST(MetaheuristicTest, DeterministicPerSeed) {
  const Instance inst = testing::small_instance(4, 40, 4.0, 6);
  for (const auto* name : {"ga", "aco", "bco"}) {
    const FlowSolution a = solve_with(name, inst, quick_params(9));
    const FlowSolution b = solve_with(name, inst, quick_params(9));
    EXPECT_EQ(a.flows, b.flows) << name;
    EXPECT_EQ(a.cost, b.cost) << name;
  }
}

TEST(MetaheuristicTest, RejectsBadParams) {
  MetaheuristicParams p;
  p.evaporation = 1.0;
  EXPECT_THROW(solve_aco(w1(), p), std::invalid_argument);
  p = {};
  p.population = 0;
  EXPECT_THROW(solve_ga(w1(), p), std::invalid_argument);
}

TEST(BaselinePropertyTest, FeasibleAndDominatedByOst) {
  Rng rng(201);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = testing::random_small_instance(rng, seed);
    const double best = brute_force_optimum(inst).cost;
    for (const auto* name : {"mst", "spt", "ga", "aco", "bco"}) {
      const FlowSolution sol = solve_with(name, inst, quick_params(seed));
      EXPECT_TRUE(check_constraints(inst, sol).ok()) << name << "\n"
                                                     << check_constraints(inst, sol).to_text();
      EXPECT_TRUE(check_tree(inst, sol).ok()) << name;
      EXPECT_NEAR(total_cost(inst, sol), sol.cost, 1e-9) << name;
      EXPECT_GE(sol.cost, best - 1e-9) << name << " seed " << seed;
    }
  }
}

TEST(BaselinePropertyTest, LargerInstancesFeasible) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Instance inst = testing::small_instance(seed, 100, 4.0, 8);
    const double ost = solve_ost(inst).cost;
    for (const auto* name : {"mst", "spt", "ga", "aco", "bco"}) {
      const FlowSolution sol = solve_with(name, inst, quick_params(seed));
      EXPECT_TRUE(check_constraints(inst, sol).ok()) << name;
      EXPECT_GE(sol.cost, ost - 1e-9) << name;
    }
  }
}

TEST(SolveWithTest, UnknownAlgorithm) {
  EXPECT_THROW(solve_with("nope", w1(), {}), std::invalid_argument);
  EXPECT_TRUE(is_algorithm("oracle"));
  EXPECT_FALSE(is_algorithm("dijkstra"));
}

}  // namespace
}  // namespace ost
