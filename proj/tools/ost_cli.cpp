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

// ost: solve, generate, validate and benchmark multicast flow instances.
//
// Exit status: 0 success, 1 usage / IO / parse error, 2 infeasible instance,
// 3 solver produced an infeasible solution (not emitted). `validate` exits 0
// iff the report is empty and 4 otherwise.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ost/ost.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasibleInstance = 2;
constexpr int kExitInfeasibleSolution = 3;
constexpr int kExitViolations = 4;

void add_metaheuristic_flags(CLI::App* cmd, ost::MetaheuristicParams& p) {
  cmd->add_option("--pop,--ga-pop", p.population, "Population / colony size")->capture_default_str();
  cmd->add_option("--iters", p.iterations, "Metaheuristic iterations")->capture_default_str();
  cmd->add_option("--ga-crossover", p.crossover_rate, "GA crossover rate")->capture_default_str();
  cmd->add_option("--ga-mutation", p.mutation_rate, "GA per-bit mutation rate")->capture_default_str();
  cmd->add_option("--ga-tournament", p.tournament_size, "GA tournament size")->capture_default_str();
  cmd->add_option("--aco-ants", p.ant_count, "ACO ants per iteration")->capture_default_str();
  cmd->add_option("--aco-rho", p.evaporation, "ACO evaporation rate")->capture_default_str();
  cmd->add_option("--aco-alpha", p.pheromone_weight, "ACO pheromone weight")->capture_default_str();
  cmd->add_option("--aco-beta", p.heuristic_weight, "ACO heuristic weight")->capture_default_str();
  cmd->add_option("--bco-scout", p.scout_fraction, "BCO scout fraction")->capture_default_str();
  cmd->add_option("--bco-limit", p.abandonment_limit, "BCO abandonment limit")->capture_default_str();
}

std::vector<ost::DemandLevel> demand_levels(const std::vector<double>& values,
                                            std::vector<double> probabilities) {
  if (probabilities.empty()) probabilities.assign(values.size(), 1.0 / values.size());
  if (probabilities.size() != values.size()) {
    throw std::invalid_argument("--probabilities must match --demands in length");
  }
  std::vector<ost::DemandLevel> out;
  for (std::size_t i = 0; i < values.size(); ++i) out.push_back({values[i], probabilities[i]});
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    ost::write_file(path, text);
  }
}

int bench_threads() {
  const char* env = std::getenv("OST_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  try {
    return std::max(0, std::stoi(env));
  } catch (const std::exception&) {
    throw std::invalid_argument("OST_THREADS must be a non-negative integer");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"On-demand Steiner tree solver for heterogeneous-rate multicast flows"};
  app.require_subcommand(1);

  // solve
  std::string instance_path, output_path, algorithm = "ost";
  bool timing = false;
  ost::MetaheuristicParams params;
  auto* solve = app.add_subcommand("solve", "Solve an instance document");
  solve->add_option("--instance", instance_path, "Instance JSON")->required();
  solve->add_option("--algorithm", algorithm, "ost|oracle|mst|spt|ga|aco|bco")
      ->check(CLI::IsMember({"ost", "oracle", "mst", "spt", "ga", "aco", "bco"}))
      ->capture_default_str();
  solve->add_option("--output", output_path, "Solution JSON (default stdout)");
  solve->add_option("--seed", params.seed, "Metaheuristic seed")->capture_default_str();
  solve->add_flag("--timing", timing, "Record wall-clock runtime_ms (otherwise 0)");
  add_metaheuristic_flags(solve, params);

  // gen
  ost::GenConfig gen_cfg;
  std::vector<double> demand_values{1.0, 0.5, 0.25}, demand_probs;
  int regular_degree = 0;
  std::string gen_output;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--nodes", gen_cfg.node_count, "Node count")->required();
  gen->add_option("--avg-degree", gen_cfg.avg_degree, "Average degree")->required();
  gen->add_option("--terminals", gen_cfg.terminal_count, "Terminal count")->required();
  gen->add_option("--seed", gen_cfg.seed, "Seed")->capture_default_str();
  gen->add_option("--demands", demand_values, "Demand values")->delimiter(',');
  gen->add_option("--probabilities", demand_probs, "Demand probabilities (default uniform)")
      ->delimiter(',');
  gen->add_option("--regular", regular_degree, "Random regular topology of this degree "
                                               "(overrides --avg-degree)");
  gen->add_option("--output", gen_output, "Instance JSON (default stdout)");

  // validate
  std::string solution_path;
  bool structure = false;
  auto* validate = app.add_subcommand("validate", "Check a solution against an instance");
  validate->add_option("--instance", instance_path, "Instance JSON")->required();
  validate->add_option("--solution", solution_path, "Solution JSON")->required();
  validate->add_flag("--structure", structure, "Also check tree shape and the flow law");

  // bench
  std::string sweep_name, csv_path, summary_path;
  ost::SweepConfig sweep;
  std::vector<std::string> algorithms{"ost", "mst", "spt", "ga", "aco", "bco"};
  std::vector<double> bench_demands{1.0, 0.5, 0.25}, bench_probs;
  auto* bench = app.add_subcommand("bench", "Run a parameter sweep and write CSV tables");
  bench->add_option("--sweep", sweep_name,
                    "node-count|node-count-small|avg-degree|regular-degree|user-count|"
                    "demand-variance")
      ->required();
  bench->add_option("--values", sweep.values, "Swept values, increasing")->required()->delimiter(',');
  bench->add_option("--trials", sweep.trials, "Seeds 0..trials-1")->capture_default_str();
  bench->add_option("--algorithms", algorithms, "Algorithms")->delimiter(',');
  bench->add_option("--nodes", sweep.base.node_count, "Base node count")->capture_default_str();
  bench->add_option("--avg-degree", sweep.base.avg_degree, "Base average degree")->capture_default_str();
  bench->add_option("--terminals", sweep.base.terminal_count, "Base terminal count")->capture_default_str();
  bench->add_option("--demands", bench_demands, "Base demand values")->delimiter(',');
  bench->add_option("--probabilities", bench_probs, "Base demand probabilities")->delimiter(',');
  bench->add_option("--ost-cap", sweep.ost_terminal_cap, "Skip ost above this terminal count")
      ->capture_default_str();
  bench->add_option("--meta-seed", sweep.params.seed, "Xor-ed into every cell's metaheuristic seed")
      ->capture_default_str();
  bench->add_option("--csv", csv_path, "Results CSV path")->required();
  bench->add_option("--summary", summary_path, "Summary CSV path (default stdout)");
  bench->add_flag("--timing", timing, "Record wall-clock runtime_ms (otherwise 0)");
  add_metaheuristic_flags(bench, sweep.params);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve) {
      const ost::Instance inst = ost::parse_instance(ost::read_file(instance_path));
      if (auto report = ost::validate_instance(inst); !report.empty()) {
        for (const auto& line : report) std::cerr << line << "\n";
        return kExitInfeasibleInstance;
      }
      const ost::FlowSolution sol = ost::solve_with(algorithm, inst, params);
      if (auto report = ost::check_constraints(inst, sol); !report.ok()) {
        std::cerr << "refusing to emit an infeasible solution:\n" << report.to_text();
        return kExitInfeasibleSolution;
      }
      emit(output_path, ost::serialize_solution(sol, timing));
      return kExitOk;
    }

    if (*gen) {
      gen_cfg.demand_set = demand_levels(demand_values, demand_probs);
      const ost::Instance inst = regular_degree > 0
                                     ? ost::generate_regular_instance(gen_cfg, regular_degree)
                                     : ost::generate_instance(gen_cfg);
      emit(gen_output, ost::serialize_instance(inst));
      return kExitOk;
    }

    if (*validate) {
      const ost::Instance inst = ost::parse_instance(ost::read_file(instance_path));
      const ost::FlowSolution sol = ost::parse_solution(ost::read_file(solution_path));
      ost::ValidationReport report = ost::check_constraints(inst, sol);
      if (structure) {
        const auto tree = ost::check_tree(inst, sol);
        report.append(tree);
        if (tree.ok()) report.append(ost::check_flow_law(inst, sol));
      }
      std::cout << report.to_text();
      return report.ok() ? kExitOk : kExitViolations;
    }

    if (*bench) {
      auto kind = ost::parse_sweep_kind(sweep_name);
      if (!kind) throw std::invalid_argument("--sweep: unknown sweep '" + sweep_name + "'");
      sweep.kind = *kind;
      sweep.algorithms = algorithms;
      sweep.base.demand_set = demand_levels(bench_demands, bench_probs);
      sweep.threads = bench_threads();
      const ost::ResultTable table = ost::run_sweep(sweep);
      for (const auto& w : table.warnings) std::cerr << "warning: " << w << "\n";
      emit(csv_path, ost::emit_csv(table, timing));
      emit(summary_path, ost::emit_csv(ost::summarize(table)));
      return kExitOk;
    }
  } catch (const ost::InfeasibleInstance& e) {
    std::cerr << e.what() << "\n";
    return kExitInfeasibleInstance;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
