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

#ifndef OST_SOLVERS_HPP_
#define OST_SOLVERS_HPP_

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ost/baselines.hpp"
#include "ost/oracle.hpp"
#include "ost/ost_dp.hpp"

namespace ost {

inline constexpr std::array<std::string_view, 7> kAlgorithmNames = {
    "ost", "oracle", "mst", "spt", "ga", "aco", "bco"};

inline bool is_algorithm(std::string_view name) {
  return std::find(kAlgorithmNames.begin(), kAlgorithmNames.end(), name) != kAlgorithmNames.end();
}

/// Dispatches to the named solver. The metaheuristic params are ignored by
/// the deterministic solvers.
inline FlowSolution solve_with(std::string_view algorithm, const Instance& inst,
                               const MetaheuristicParams& params = {}) {
  if (algorithm == "ost") return solve_ost(inst);
  if (algorithm == "oracle") return brute_force_optimum(inst);
  if (algorithm == "mst") return solve_mst_prune(inst);
  if (algorithm == "spt") return solve_sp_union(inst);
  if (algorithm == "ga") return solve_ga(inst, params);
  if (algorithm == "aco") return solve_aco(inst, params);
  if (algorithm == "bco") return solve_bco(inst, params);
  throw std::invalid_argument("unknown algorithm '" + std::string(algorithm) + "'");
}

}  // namespace ost

#endif  // OST_SOLVERS_HPP_
