// Copyright 2026 The RASM Authors.
//
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

#include "rasm/bench.h"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <ostream>
#include <tuple>

#include "rasm/instance.h"
#include "rasm/risk.h"
#include "src/parallel.h"

namespace rasm {

namespace {

struct Cell {
  int size_index;
  double alpha;
  int k;
  const std::vector<CutFamily>* families;
};

}  // namespace

std::vector<BenchRow> RunBench(const BenchOptions& options,
                               const std::function<void(const BenchRow&)>& on_row) {
  std::vector<std::unique_ptr<RascOracle>> oracles;
  std::vector<int> v_actual;
  for (std::size_t s = 0; s < options.v_totals.size(); ++s) {
    const int half = std::max(
        1, static_cast<int>(std::lround(options.scale * options.v_totals[s] / 2.0)));
    GeneratorParams gen;
    gen.n = half;
    gen.m = half;
    gen.prob_low = options.prob_low;
    gen.prob_high = options.prob_high;
    gen.seed = options.seed + static_cast<uint64_t>(options.v_totals[s]);
    oracles.push_back(std::make_unique<RascOracle>(GenerateInstance(gen)));
    v_actual.push_back(2 * half);
  }

  std::vector<Cell> cells;
  for (std::size_t s = 0; s < options.v_totals.size(); ++s) {
    for (double alpha : options.alphas) {
      for (int k : options.ks) {
        for (const auto& families : options.configs) {
          cells.push_back({static_cast<int>(s), alpha, k, &families});
        }
      }
    }
  }

  std::vector<BenchRow> rows(cells.size());
  std::mutex report_mu;
  const int workers = options.parallel_cells ? std::max(1, options.threads) : 1;
  internal::ParallelFor(cells.size(), workers, [&](std::size_t c) {
    const Cell& cell = cells[c];
    const RascOracle& oracle = *oracles[cell.size_index];
    SolveConfig config;
    config.risk = {cell.alpha, options.epsilon};
    config.region = {std::min(cell.k, oracle.ground_set_size())};
    config.cut_families = *cell.families;
    config.mode = options.mode;
    config.time_limit = options.time_limit;
    config.threads = options.parallel_cells ? 1 : options.threads;
    const SolveResult result = SolveRasm(oracle, config);
    BenchRow& row = rows[c];
    row.v_total = v_actual[cell.size_index];
    row.alpha = cell.alpha;
    row.k = cell.k;
    row.family_config = CutFamiliesName(*cell.families);
    row.time_s = result.wall_time;
    row.cuts = result.cuts_added;
    row.nodes = result.nodes_total;
    row.status = result.status;
    row.objective = result.cvar_best;
    if (on_row) {
      std::lock_guard<std::mutex> lock(report_mu);
      on_row(row);
    }
  });
  return rows;
}

void WriteBenchCsvHeader(std::ostream& out) {
  out << kBenchCsvVersion << '\n' << kBenchCsvHeader << '\n';
}

std::string ToCsvLine(const BenchRow& row) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%d,%g,%d,%s,%.3f,%lld,%lld,%s,%.9f",
                row.v_total, row.alpha, row.k, row.family_config.c_str(),
                row.time_s, static_cast<long long>(row.cuts),
                static_cast<long long>(row.nodes),
                std::string(SolveStatusName(row.status)).c_str(),
                row.objective);
  return buf;
}

std::vector<std::string> CheckBenchConsistency(const std::vector<BenchRow>& rows,
                                               double tolerance) {
  std::vector<std::string> issues;
  // (v_total, alpha, k) -> optimal objective agreed by the configurations.
  std::map<std::tuple<int, double, int>, double> optimum;
  for (const BenchRow& row : rows) {
    if (row.status != SolveStatus::kOptimal) continue;
    const auto key = std::make_tuple(row.v_total, row.alpha, row.k);
    auto [it, inserted] = optimum.try_emplace(key, row.objective);
    if (!inserted && std::abs(it->second - row.objective) > tolerance) {
      char buf[256];
      std::snprintf(buf, sizeof(buf),
                    "objective mismatch at v=%d alpha=%g k=%d: %s gives %.9f, "
                    "another configuration gives %.9f",
                    row.v_total, row.alpha, row.k, row.family_config.c_str(),
                    row.objective, it->second);
      issues.emplace_back(buf);
    }
  }
  for (const auto& [key, value] : optimum) {
    for (const auto& [other, other_value] : optimum) {
      if (std::get<0>(key) != std::get<0>(other) ||
          std::get<2>(key) != std::get<2>(other) ||
          !(std::get<1>(key) < std::get<1>(other))) {
        continue;
      }
      if (value > other_value + tolerance) {
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "optimum not monotone in alpha at v=%d k=%d: "
                      "alpha=%g gives %.9f > alpha=%g gives %.9f",
                      std::get<0>(key), std::get<2>(key), std::get<1>(key),
                      value, std::get<1>(other), other_value);
        issues.emplace_back(buf);
      }
    }
  }
  return issues;
}

}  // namespace rasm
