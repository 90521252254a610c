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

#include "rasm/master.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>

#include "rasm/errors.h"

namespace rasm {

void CutPool::Add(Cut cut) {
  if (cut.size() != n_ || cut.incumbent.size() != n_) {
    throw ParameterError("cut of dimension " + std::to_string(cut.size()) +
                         " with incumbent of dimension " +
                         std::to_string(cut.incumbent.size()) +
                         " does not fit pool dimension " + std::to_string(n_));
  }
  for (int j = 0; j < n_; ++j) {
    if (cut.coeffs(j) < -kCoeffClamp) {
      throw ParameterError("cut coefficient " + std::to_string(j) +
                           " is negative");
    }
    if (cut.coeffs(j) < kCoeffClamp) cut.coeffs(j) = 0.0;
  }
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return cut.coeffs(a) > cut.coeffs(b);
  });
  cuts_.push_back(std::move(cut));
  order_.push_back(std::move(order));
}

double CutPool::Evaluate(const Selection& x) const {
  if (cuts_.empty()) throw ContractError("empty cut pool");
  double value = std::numeric_limits<double>::infinity();
  for (const Cut& cut : cuts_) value = std::min(value, Rhs(cut, x));
  return value;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Search {
 public:
  Search(const CutPool& pool, const FeasibleRegion& region,
         const SearchHooks& hooks)
      : pool_(pool),
        hooks_(hooks),
        n_(pool.dimension()),
        target_(std::min(region.k, pool.dimension())),
        state_(n_, kFree),
        current_(n_),
        columns_(n_),
        max_coeff_(n_, 0.0) {
    Sync();
  }

  SearchOutcome Run() {
    free_count_ = n_;
    Visit();
    SearchOutcome out;
    out.best.x = best_x_.size() == n_ ? best_x_ : Selection(n_);
    out.best.psi = incumbent_;
    out.best.nodes = nodes_;
    out.completed = !stopped_;
    out.max_pruned_bound = max_pruned_;
    return out;
  }

 private:
  static constexpr int8_t kFree = -1;

  // Brings per-cut bookkeeping up to date with cuts appended to the pool.
  void Sync() {
    for (int c = synced_; c < pool_.size(); ++c) {
      const Cut& cut = pool_[c];
      double base = cut.constant;
      for (int j : ones_) base += cut.coeffs(j);
      base_.push_back(base);
      for (int j = 0; j < n_; ++j) {
        columns_[j].push_back(cut.coeffs(j));
        max_coeff_[j] = std::max(max_coeff_[j], cut.coeffs(j));
      }
    }
    synced_ = pool_.size();
  }

  // min over cuts of constant + fixed ones + best (target - ones) free
  // coefficients. Stops early once the bound drops to the prune threshold.
  double Bound(double threshold) const {
    const int need = target_ - static_cast<int>(ones_.size());
    double bound = kInf;
    for (int c = 0; c < synced_; ++c) {
      double value = base_[c];
      // Free coefficients only add, so this cut cannot lower the minimum.
      if (value >= bound) continue;
      if (need > 0) {
        const Cut& cut = pool_[c];
        int taken = 0;
        for (int j : pool_.DescendingOrder(c)) {
          if (state_[j] != kFree) continue;
          value += cut.coeffs(j);
          if (++taken == need) break;
        }
      }
      bound = std::min(bound, value);
      if (bound <= threshold) break;
    }
    return bound;
  }

  void Fix(int j, int8_t value) {
    state_[j] = value;
    --free_count_;
    if (value == 1) {
      ones_.push_back(j);
      current_.Set(j);
      const double* col = columns_[j].data();
      for (int c = 0; c < synced_; ++c) base_[c] += col[c];
    }
  }

  void Unfix(int j) {
    if (state_[j] == 1) {
      ones_.pop_back();
      current_.Reset(j);
      const double* col = columns_[j].data();
      for (int c = 0; c < synced_; ++c) base_[c] -= col[c];
    }
    state_[j] = kFree;
    ++free_count_;
  }

  int BranchVariable() const {
    int pick = -1;
    for (int j = 0; j < n_; ++j) {
      if (state_[j] != kFree) continue;
      if (pick < 0 || max_coeff_[j] > max_coeff_[pick]) pick = j;
    }
    return pick;
  }

  void Visit() {
    if (stopped_) return;
    ++nodes_;
    const double threshold = incumbent_ + kPruneSlack;
    const double bound = Bound(threshold);
    if (bound <= threshold) {
      max_pruned_ = std::max(max_pruned_, bound);
      return;
    }
    const int ones = static_cast<int>(ones_.size());
    if (ones == target_) {
      Leaf(bound);
      return;
    }
    const int j = BranchVariable();
    Fix(j, 1);
    Visit();
    Unfix(j);
    // The zero side stays open only if enough free variables remain.
    if (free_count_ - 1 >= target_ - ones) {
      Fix(j, 0);
      Visit();
      Unfix(j);
    }
  }

  void Leaf(double psi) {
    if (hooks_.should_stop && hooks_.should_stop()) {
      stopped_ = true;
      return;
    }
    double value = psi;
    if (hooks_.on_leaf) {
      value = hooks_.on_leaf(current_, psi);
      Sync();
    }
    if (best_x_.size() != n_ || value > incumbent_) {
      incumbent_ = value;
      best_x_ = current_;
    }
  }

  const CutPool& pool_;
  const SearchHooks& hooks_;
  const int n_;
  const int target_;
  std::vector<int8_t> state_;
  std::vector<int> ones_;
  Selection current_;
  // constant + coefficients of the variables fixed to one, per cut.
  std::vector<double> base_;
  // columns_[j][c] is the coefficient of x_j in cut c.
  std::vector<std::vector<double>> columns_;
  std::vector<double> max_coeff_;
  int synced_ = 0;
  int free_count_ = 0;
  int64_t nodes_ = 0;
  double incumbent_ = -kInf;
  double max_pruned_ = -kInf;
  Selection best_x_;
  bool stopped_ = false;
};

}  // namespace

SearchOutcome SearchMaster(const CutPool& pool, const FeasibleRegion& region,
                           const SearchHooks& hooks) {
  if (pool.empty()) {
    throw ContractError("master problem is unbounded with an empty cut pool");
  }
  region.Validate(pool.dimension());
  return Search(pool, region, hooks).Run();
}

MasterSolution SolveMaster(const CutPool& pool, const FeasibleRegion& region) {
  return SearchMaster(pool, region, SearchHooks{}).best;
}

void ExportLp(const CutPool& pool, const FeasibleRegion& region,
              std::ostream& out) {
  if (pool.empty()) {
    throw ContractError("master problem is unbounded with an empty cut pool");
  }
  const int n = pool.dimension();
  region.Validate(n);
  char buf[64];
  out << "\\ relaxed master problem: " << pool.size() << " cuts, n = " << n
      << ", k = " << region.k << "\n";
  out << "Maximize\n obj: psi\nSubject To\n";
  for (int c = 0; c < pool.size(); ++c) {
    const Cut& cut = pool[c];
    out << " c" << c << ": psi";
    for (int j = 0; j < n; ++j) {
      if (cut.coeffs(j) == 0.0) continue;
      std::snprintf(buf, sizeof(buf), " - %.17g x%d", cut.coeffs(j), j);
      out << buf;
    }
    std::snprintf(buf, sizeof(buf), " <= %.17g\n", cut.constant);
    out << buf;
  }
  out << " card:";
  for (int j = 0; j < n; ++j) out << (j == 0 ? " " : " + ") << 'x' << j;
  out << " <= " << region.k << "\n";
  out << "Bounds\n psi free\nBinaries\n";
  for (int j = 0; j < n; ++j) out << " x" << j << "\n";
  out << "End\n";
}

void ExportLp(const CutPool& pool, const FeasibleRegion& region,
              const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  ExportLp(pool, region, out);
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace rasm
