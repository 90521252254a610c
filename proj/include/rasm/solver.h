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

// Delayed constraint generation for max_{|X| <= k} CVaR_alpha(sigma(x)).
//
// Loop mode re-solves the master problem after every round of cuts:
//   solve master -> (x, UB); LB = max(LB, CVaR(x)); stop if UB - LB <= eps;
//   else add one cut per selected family at x.
// Lazy mode runs a single branch-and-bound tree and generates cuts at
// integer leaves whose master value overestimates the oracle by more than
// eps, without restarting the tree.

#ifndef RASM_SOLVER_H_
#define RASM_SOLVER_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rasm/cuts.h"
#include "rasm/instance.h"
#include "rasm/master.h"
#include "rasm/risk.h"
#include "rasm/selection.h"

namespace rasm {

enum class SolveMode { kLoop, kLazy };
enum class SolveStatus { kOptimal, kTimeLimit, kIterationLimit };

std::string_view SolveModeName(SolveMode mode);
std::optional<SolveMode> ParseSolveMode(std::string_view name);
std::string_view SolveStatusName(SolveStatus status);

// Parses a comma list such as "lshaped,new,lifted" into canonical order
// (LShaped, NewCut, Lifted) without duplicates. nullopt on an unknown name
// or an empty list.
std::optional<std::vector<CutFamily>> ParseCutFamilies(std::string_view list);
std::string CutFamiliesName(const std::vector<CutFamily>& families);

struct TraceRow {
  int64_t iteration = 0;
  double upper_bound = 0.0;
  double lower_bound = 0.0;
  int64_t cuts = 0;
  int64_t nodes = 0;
  double elapsed = 0.0;
};

inline constexpr std::string_view kTraceCsvHeader =
    "iteration,ub,lb,cuts,nodes,elapsed";
std::string ToCsvLine(const TraceRow& row);

struct SolveConfig {
  RiskParams risk;
  FeasibleRegion region;
  std::vector<CutFamily> cut_families = {CutFamily::kNewCut};
  SolveMode mode = SolveMode::kLoop;
  double time_limit = std::numeric_limits<double>::infinity();  // seconds
  int64_t iteration_limit = std::numeric_limits<int64_t>::max();
  int threads = 1;
  // Called once per iteration (Loop) or per evaluated leaf (Lazy).
  std::function<void(const TraceRow&)> trace;

  void Validate(int n) const;
};

struct SolveResult {
  Selection x_best;
  double cvar_best = 0.0;
  double upper_bound = 0.0;
  int64_t iterations = 0;
  int64_t cuts_added = 0;
  int64_t nodes_total = 0;
  double wall_time = 0.0;
  SolveStatus status = SolveStatus::kOptimal;
  // Final cut pool, for export.
  CutPool pool{0};
};

SolveResult SolveRasm(const CvarOracle& oracle, const SolveConfig& config);

inline constexpr int64_t kExhaustiveMaxSupports = 10'000'000;

// Evaluates every support of size <= k in lexicographic order and keeps the
// first one whose value beats the incumbent by more than kValueTolerance.
// iterations reports the number of supports evaluated.
SolveResult SolveExhaustive(const CvarOracle& oracle,
                            const FeasibleRegion& region, double alpha);

// sum_{i <= k} C(n, i), saturating at INT64_MAX.
int64_t CountSupports(int n, int k);

}  // namespace rasm

#endif  // RASM_SOLVER_H_
