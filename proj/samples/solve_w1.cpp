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

// Builds the four-node example network in code, solves it exactly and with
// the MST baseline, and prints both flow trees.

#include <iostream>

#include "ost/ost.hpp"

int main() {
  ost::Graph graph(4, {{0, 1, 1.0}, {1, 2, 0.1}, {1, 3, 0.1}, {0, 3, 0.3}});
  ost::Instance inst(std::move(graph), /*source=*/0, {{2, 0.25}, {3, 1.0}});

  for (const char* name : {"ost", "mst"}) {
    const ost::FlowSolution sol = ost::solve_with(name, inst);
    std::cout << name << ": cost " << sol.cost << "\n";
    for (const auto& [edge, flow] : sol.flows) {
      std::cout << "  " << edge.from << " -> " << edge.to << "  flow " << flow << "\n";
    }
  }
  return 0;
}
