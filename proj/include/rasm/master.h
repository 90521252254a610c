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

// Relaxed master problem
//   max psi  s.t.  psi <= constant_c + coeffs_c . x  for every cut c,
//                  sum_i x_i <= k,  x binary,
// solved by a combinatorial depth-first branch-and-bound. All cut
// coefficients are nonnegative, so the objective min_c rhs_c(x) is
// nondecreasing in x and an optimum exists with exactly min(k, n) ones;
// the search only enumerates such supports.

#ifndef RASM_MASTER_H_
#define RASM_MASTER_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "rasm/cuts.h"
#include "rasm/instance.h"
#include "rasm/selection.h"

namespace rasm {

// Append-only pool of cuts over a common ground set.
class CutPool {
 public:
  explicit CutPool(int n) : n_(n) {}

  // Throws ParameterError on dimension mismatch or a negative coefficient.
  void Add(Cut cut);

  int dimension() const { return n_; }
  int size() const { return static_cast<int>(cuts_.size()); }
  bool empty() const { return cuts_.empty(); }
  const Cut& operator[](int c) const { return cuts_[c]; }
  const std::vector<Cut>& cuts() const { return cuts_; }

  // Indices of cut c sorted by decreasing coefficient (ties by index).
  const std::vector<int>& DescendingOrder(int c) const { return order_[c]; }

  // min_c Rhs(cut_c, x). Requires a nonempty pool.
  double Evaluate(const Selection& x) const;

 private:
  int n_;
  std::vector<Cut> cuts_;
  std::vector<std::vector<int>> order_;
};

struct MasterSolution {
  Selection x;
  double psi = 0.0;
  int64_t nodes = 0;
};

inline constexpr double kPruneSlack = 1e-9;

// Exact optimum of the relaxed master problem. Throws ContractError on an
// empty pool.
MasterSolution SolveMaster(const CutPool& pool, const FeasibleRegion& region);

// Hooks for running the search as a single tree with lazily generated cuts.
struct SearchHooks {
  // Called at each leaf whose psi (under the current pool) beats the
  // incumbent. Returns the objective value the leaf really attains and may
  // append cuts to the pool being searched.
  std::function<double(const Selection& x, double psi)> on_leaf;
  // Polled between leaves; returning true abandons the search.
  std::function<bool()> should_stop;
};

struct SearchOutcome {
  MasterSolution best;
  bool completed = true;
  // Largest node bound discarded by pruning (-inf if none). Together with
  // the incumbent it bounds the optimum from above.
  double max_pruned_bound = 0.0;
};

// The branch-and-bound behind SolveMaster. `pool` may grow during the
// search through hooks.on_leaf; new cuts are picked up at the next node.
SearchOutcome SearchMaster(const CutPool& pool, const FeasibleRegion& region,
                           const SearchHooks& hooks);

// Writes the master problem in CPLEX LP text format:
//   Maximize / obj: psi
//   Subject To / c<i>: psi - sum_j a_j x<j> <= constant   (one per cut)
//                card: sum_j x<j> <= k
//   Bounds / psi free
//   Binaries / x0 ... x<n-1>
//   End
void ExportLp(const CutPool& pool, const FeasibleRegion& region,
              std::ostream& out);
void ExportLp(const CutPool& pool, const FeasibleRegion& region,
              const std::string& path);

}  // namespace rasm

#endif  // RASM_MASTER_H_
