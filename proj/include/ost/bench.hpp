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

// Parameter sweeps: one generated instance per (sweep value, seed), every
// listed algorithm run on it, every output validated. Cells run in parallel;
// the table is assembled in canonical order, so output does not depend on
// the schedule.

#ifndef OST_BENCH_HPP_
#define OST_BENCH_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "ost/generator.hpp"
#include "ost/solvers.hpp"
#include "ost/validate.hpp"

namespace ost {

namespace detail {

inline std::string fmt9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

}  // namespace detail

enum class SweepKind {
  kNodeCount,
  kNodeCountSmall,
  kAvgDegree,
  kRegularDegree,
  kUserCount,
  kDemandVariance,
};

inline std::string_view to_string(SweepKind k) {
  switch (k) {
    case SweepKind::kNodeCount: return "node-count";
    case SweepKind::kNodeCountSmall: return "node-count-small";
    case SweepKind::kAvgDegree: return "avg-degree";
    case SweepKind::kRegularDegree: return "regular-degree";
    case SweepKind::kUserCount: return "user-count";
    case SweepKind::kDemandVariance: return "demand-variance";
  }
  return "unknown";
}

inline std::optional<SweepKind> parse_sweep_kind(std::string_view s) {
  for (SweepKind k : {SweepKind::kNodeCount, SweepKind::kNodeCountSmall, SweepKind::kAvgDegree,
                      SweepKind::kRegularDegree, SweepKind::kUserCount,
                      SweepKind::kDemandVariance}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

struct SweepConfig {
  SweepKind kind = SweepKind::kNodeCount;
  std::vector<double> values;
  int trials = 30;  // instance seeds 0 .. trials-1
  GenConfig base;   // base.seed is replaced by the trial seed
  std::vector<std::string> algorithms;
  MetaheuristicParams params;  // seed is xor-ed with the trial seed
  int ost_terminal_cap = 16;   // ost is skipped above this many terminals
  int threads = 0;             // 0 = all hardware threads

  void validate() const {
    auto fail = [](const std::string& m) { throw std::invalid_argument(m); };
    if (values.empty()) fail("values: must be non-empty");
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (!(values[i] > values[i - 1])) fail("values: must be strictly increasing");
    }
    if (trials < 1) fail("trials: must be positive");
    if (algorithms.empty()) fail("algorithms: must be non-empty");
    for (const auto& a : algorithms) {
      if (!is_algorithm(a)) fail("algorithms: unknown algorithm '" + a + "'");
    }
    auto sorted = algorithms;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail("algorithms: duplicate entry");
    }
    const bool integral = kind != SweepKind::kAvgDegree && kind != SweepKind::kDemandVariance;
    for (double v : values) {
      if (integral && (v != std::floor(v) || v < 1)) {
        fail("values: " + std::string(to_string(kind)) + " needs positive integers");
      }
      if (kind == SweepKind::kAvgDegree && !(v > 0)) fail("values: avg-degree must be positive");
      if (kind == SweepKind::kDemandVariance && !(v >= 0.0 && v < 0.5)) {
        fail("values: demand-variance spread must lie in [0, 0.5)");
      }
    }
    params.validate();
  }
};

struct ResultRow {
  SweepKind kind = SweepKind::kNodeCount;
  double sweep_value = 0.0;
  std::uint64_t seed = 0;
  std::string algorithm;
  double cost = 0.0;
  double runtime_ms = 0.0;
  bool feasible = false;
};

struct ResultTable {
  std::vector<ResultRow> rows;
  std::vector<std::string> warnings;
};

struct SummaryRow {
  double sweep_value = 0.0;
  std::string algorithm;
  double mean_cost = 0.0;
  double std_cost = 0.0;
  double improvement_pct = 0.0;  // NaN when ost has no rows at this value
};

/// Instance of one sweep cell.
inline Instance sweep_instance(const SweepConfig& cfg, double value, std::uint64_t seed) {
  GenConfig g = cfg.base;
  g.seed = seed;
  switch (cfg.kind) {
    case SweepKind::kNodeCount:
    case SweepKind::kNodeCountSmall:
      g.node_count = static_cast<int>(value);
      break;
    case SweepKind::kAvgDegree:
      g.avg_degree = value;
      break;
    case SweepKind::kRegularDegree:
      return generate_regular_instance(g, static_cast<int>(value));
    case SweepKind::kUserCount:
      g.terminal_count = static_cast<int>(value);
      break;
    case SweepKind::kDemandVariance:
      g.demand_set = {{0.5 - value, 1.0 / 3.0}, {0.5, 1.0 / 3.0}, {0.5 + value, 1.0 / 3.0}};
      break;
  }
  return generate_instance(g);
}

inline ResultTable run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  struct Cell {
    double value;
    std::uint64_t seed;
    std::vector<ResultRow> rows;
    std::vector<std::string> warnings;
    std::exception_ptr error;
  };
  std::vector<Cell> cells;
  for (double v : cfg.values) {
    for (int s = 0; s < cfg.trials; ++s) cells.push_back({v, static_cast<std::uint64_t>(s), {}, {}, {}});
  }

  auto run_cell = [&cfg](Cell& cell) {
    try {
      const Instance inst = sweep_instance(cfg, cell.value, cell.seed);
      auto report = validate_instance(inst);
      if (!report.empty()) {
        throw std::runtime_error("generated instance is infeasible: " + report.front());
      }
      MetaheuristicParams params = cfg.params;
      params.seed ^= cell.seed;
      for (const auto& name : cfg.algorithms) {
        if (name == "ost" && inst.terminal_count() > cfg.ost_terminal_cap) {
          cell.warnings.push_back("ost skipped at " + std::string(to_string(cfg.kind)) + "=" +
                                  detail::fmt9(cell.value) + " seed " +
                                  std::to_string(cell.seed) + ": " +
                                  std::to_string(inst.terminal_count()) + " terminals exceed cap " +
                                  std::to_string(cfg.ost_terminal_cap));
          continue;
        }
        const FlowSolution sol = solve_with(name, inst, params);
        cell.rows.push_back({cfg.kind, cell.value, cell.seed, name, sol.cost, sol.runtime_ms,
                             check_constraints(inst, sol).ok()});
      }
    } catch (const std::exception& e) {
      cell.error = std::make_exception_ptr(std::runtime_error(
          "sweep cell " + std::string(to_string(cfg.kind)) + "=" + detail::fmt9(cell.value) +
          " seed " + std::to_string(cell.seed) + ": " + e.what()));
    }
  };

  unsigned workers = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(cells.size()));
  std::atomic<std::size_t> next{0};
  auto drain = [&]() {
    for (std::size_t i = next++; i < cells.size(); i = next++) run_cell(cells[i]);
  };
  if (workers <= 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(drain);
    for (auto& t : pool) t.join();
  }

  ResultTable table;
  for (Cell& cell : cells) {
    if (cell.error) std::rethrow_exception(cell.error);
    table.rows.insert(table.rows.end(), cell.rows.begin(), cell.rows.end());
    table.warnings.insert(table.warnings.end(), cell.warnings.begin(), cell.warnings.end());
  }
  std::sort(table.rows.begin(), table.rows.end(), [](const ResultRow& a, const ResultRow& b) {
    return std::tie(a.sweep_value, a.seed, a.algorithm) <
           std::tie(b.sweep_value, b.seed, b.algorithm);
  });
  return table;
}

/// Per (sweep value, algorithm): mean and sample standard deviation of the
/// cost over seeds, and the relative saving of ost against that mean,
/// 100 * (mean_alg - mean_ost) / mean_alg.
inline std::vector<SummaryRow> summarize(const ResultTable& table) {
  std::map<std::pair<double, std::string>, std::vector<double>> costs;
  std::map<double, std::vector<std::uint64_t>> ost_seeds;
  std::map<std::pair<double, std::string>, std::vector<std::uint64_t>> seeds;
  for (const ResultRow& r : table.rows) {
    costs[{r.sweep_value, r.algorithm}].push_back(r.cost);
    seeds[{r.sweep_value, r.algorithm}].push_back(r.seed);
    if (r.algorithm == "ost") ost_seeds[r.sweep_value].push_back(r.seed);
  }
  std::vector<SummaryRow> out;
  for (const auto& [key, cs] : costs) {
    SummaryRow row;
    row.sweep_value = key.first;
    row.algorithm = key.second;
    double sum = 0.0;
    for (double c : cs) sum += c;
    row.mean_cost = sum / static_cast<double>(cs.size());
    double sq = 0.0;
    for (double c : cs) sq += (c - row.mean_cost) * (c - row.mean_cost);
    row.std_cost = cs.size() > 1 ? std::sqrt(sq / static_cast<double>(cs.size() - 1)) : 0.0;

    auto it = ost_seeds.find(key.first);
    if (it == ost_seeds.end()) {
      row.improvement_pct = std::nan("");
    } else {
      auto mine = seeds[key];
      auto ref = it->second;
      std::sort(mine.begin(), mine.end());
      std::sort(ref.begin(), ref.end());
      if (mine != ref) {
        throw std::invalid_argument("summarize: " + key.second + " and ost cover different seeds at " +
                                    detail::fmt9(key.first));
      }
      const auto& oc = costs.at({key.first, "ost"});
      double osum = 0.0;
      for (double c : oc) osum += c;
      const double ost_mean = osum / static_cast<double>(oc.size());
      row.improvement_pct =
          row.mean_cost != 0.0 ? 100.0 * (row.mean_cost - ost_mean) / row.mean_cost : 0.0;
    }
    out.push_back(std::move(row));
  }
  return out;
}

/// `with_timing` = false writes runtime_ms as 0 so output is reproducible.
inline std::string emit_csv(const ResultTable& table, bool with_timing = false) {
  std::vector<const ResultRow*> rows;
  for (const auto& r : table.rows) rows.push_back(&r);
  std::stable_sort(rows.begin(), rows.end(), [](const ResultRow* a, const ResultRow* b) {
    return std::tie(a->sweep_value, a->seed, a->algorithm) <
           std::tie(b->sweep_value, b->seed, b->algorithm);
  });
  std::string out = "sweep_kind,sweep_value,seed,algorithm,cost,runtime_ms,feasible\n";
  for (const ResultRow* r : rows) {
    out += std::string(to_string(r->kind)) + "," + detail::fmt9(r->sweep_value) + "," +
           std::to_string(r->seed) + "," + r->algorithm + "," + detail::fmt9(r->cost) + "," +
           detail::fmt9(with_timing ? r->runtime_ms : 0.0) + "," +
           (r->feasible ? "true" : "false") + "\n";
  }
  return out;
}

inline std::string emit_csv(const std::vector<SummaryRow>& summary) {
  std::vector<const SummaryRow*> rows;
  for (const auto& r : summary) rows.push_back(&r);
  std::stable_sort(rows.begin(), rows.end(), [](const SummaryRow* a, const SummaryRow* b) {
    return std::tie(a->sweep_value, a->algorithm) < std::tie(b->sweep_value, b->algorithm);
  });
  std::string out = "sweep_value,algorithm,mean_cost,std_cost,improvement_pct\n";
  for (const SummaryRow* r : rows) {
    out += detail::fmt9(r->sweep_value) + "," + r->algorithm + "," + detail::fmt9(r->mean_cost) +
           "," + detail::fmt9(r->std_cost) + "," + detail::fmt9(r->improvement_pct) + "\n";
  }
  return out;
}

}  // namespace ost

#endif  // OST_BENCH_HPP_
