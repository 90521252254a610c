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

// Benchmark grid: graph sizes x risk levels x budgets x cut configurations,
// one solve per cell, reported as CSV.

#ifndef RASM_BENCH_H_
#define RASM_BENCH_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rasm/cuts.h"
#include "rasm/solver.h"

namespace rasm {

struct BenchRow {
  int v_total = 0;  // n + m
  double alpha = 0.0;
  int k = 0;
  std::string family_config;
  double time_s = 0.0;
  int64_t cuts = 0;
  int64_t nodes = 0;
  SolveStatus status = SolveStatus::kOptimal;
  double objective = 0.0;
};

struct BenchOptions {
  std::vector<int> v_totals = {50, 100, 150};
  std::vector<double> alphas = {0.025, 0.05};
  std::vector<int> ks = {3, 5};
  std::vector<std::vector<CutFamily>> configs = {
      {CutFamily::kLShaped},
      {CutFamily::kNewCut},
      {CutFamily::kLifted},
      {CutFamily::kNewCut, CutFamily::kLifted}};
  // Multiplies every v_total; n = m = round(scale * v_total / 2).
  double scale = 1.0;
  double time_limit = 1800.0;
  double epsilon = 1e-6;
  double prob_low = 0.05;
  double prob_high = 0.20;
  uint64_t seed = 1;
  SolveMode mode = SolveMode::kLoop;
  int threads = 1;
  bool parallel_cells = false;
};

inline constexpr std::string_view kBenchCsvVersion = "# rasm-bench-csv v1";
inline constexpr std::string_view kBenchCsvHeader =
    "v_total,alpha,k,family_config,time_s,cuts,nodes,status,objective";

// Rows come back in grid order (size, alpha, k, config) regardless of
// parallel_cells. on_row, if set, sees each row as soon as it finishes.
std::vector<BenchRow> RunBench(
    const BenchOptions& options,
    const std::function<void(const BenchRow&)>& on_row = {});

void WriteBenchCsvHeader(std::ostream& out);
std::string ToCsvLine(const BenchRow& row);

// Cross-cell consistency: configurations that all reached Optimal agree on
// the objective, and the optimum at a smaller alpha never exceeds the one
// at a larger alpha. Returns one message per violation.
std::vector<std::string> CheckBenchConsistency(const std::vector<BenchRow>& rows,
                                               double tolerance = 1e-6);

}  // namespace rasm

#endif  // RASM_BENCH_H_
