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

#include "rasm/solver.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <unordered_set>

#include "rasm/errors.h"

namespace rasm {

std::string_view SolveModeName(SolveMode mode) {
  return mode == SolveMode::kLoop ? "loop" : "lazy";
}

std::optional<SolveMode> ParseSolveMode(std::string_view name) {
  if (name == "loop") return SolveMode::kLoop;
  if (name == "lazy") return SolveMode::kLazy;
  return std::nullopt;
}

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "Optimal";
    case SolveStatus::kTimeLimit:
      return "TimeLimit";
    case SolveStatus::kIterationLimit:
      return "IterationLimit";
  }
  return "Unknown";
}

std::optional<std::vector<CutFamily>> ParseCutFamilies(std::string_view list) {
  bool seen[3] = {false, false, false};
  while (!list.empty()) {
    const std::size_t comma = list.find(',');
    const std::string_view name = list.substr(0, comma);
    const std::optional<CutFamily> family = ParseCutFamily(name);
    if (!family) return std::nullopt;
    seen[static_cast<int>(*family)] = true;
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  std::vector<CutFamily> out;
  for (CutFamily f :
       {CutFamily::kLShaped, CutFamily::kNewCut, CutFamily::kLifted}) {
    if (seen[static_cast<int>(f)]) out.push_back(f);
  }
  if (out.empty()) return std::nullopt;
  return out;
}

std::string CutFamiliesName(const std::vector<CutFamily>& families) {
  std::string out;
  for (CutFamily f : families) {
    if (!out.empty()) out += '+';
    out += CutFamilyName(f);
  }
  return out;
}

std::string ToCsvLine(const TraceRow& row) {
  char buf[192];
  std::snprintf(buf, sizeof(buf), "%lld,%.12g,%.12g,%lld,%lld,%.6f",
                static_cast<long long>(row.iteration), row.upper_bound,
                row.lower_bound, static_cast<long long>(row.cuts),
                static_cast<long long>(row.nodes), row.elapsed);
  return buf;
}

void SolveConfig::Validate(int n) const {
  risk.Validate();
  region.Validate(n);
  if (cut_families.empty()) {
    throw ParameterError("at least one cut family is required");
  }
  if (!(time_limit > 0.0)) throw ParameterError("time limit must be positive");
  if (iteration_limit < 1) {
    throw ParameterError("iteration limit must be positive");
  }
}

namespace {

using Clock = std::chrono::steady_clock;

class Driver {
 public:
  Driver(const CvarOracle& oracle, const SolveConfig& config)
      : oracle_(oracle),
        config_(config),
        n_(oracle.ground_set_size()),
        lshaped_(NeedsLShaped(config) ? std::optional<LShapedCutGenerator>(
                                            std::in_place, oracle)
                                      : std::nullopt),
        start_(Clock::now()) {
    result_.pool = CutPool(n_);
  }

  SolveResult Run() {
    // Seed at the empty selection so the first master problem is bounded.
    const Selection empty(n_);
    best_x_ = empty;
    lower_bound_ = oracle_.Evaluate(empty, alpha());
    AddCuts(empty);
    if (config_.mode == SolveMode::kLoop) {
      RunLoop();
    } else {
      RunLazy();
    }
    result_.x_best = best_x_;
    result_.cvar_best = oracle_.Evaluate(best_x_, alpha());
    result_.upper_bound = upper_bound_;
    result_.wall_time = Elapsed();
    return std::move(result_);
  }

 private:
  static bool NeedsLShaped(const SolveConfig& config) {
    return std::find(config.cut_families.begin(), config.cut_families.end(),
                     CutFamily::kLShaped) != config.cut_families.end();
  }

  double alpha() const { return config_.risk.alpha; }
  double Elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

  void AddCuts(const Selection& xbar) {
    for (CutFamily family : config_.cut_families) {
      Cut cut = family == CutFamily::kLShaped
                    ? lshaped_->Generate(xbar, alpha())
                    : GenerateCut(family, oracle_, xbar, alpha(),
                                  config_.threads);
      result_.pool.Add(std::move(cut));
      ++result_.cuts_added;
    }
  }

  void Observe(const Selection& x, double cvar) {
    if (cvar > lower_bound_) {
      lower_bound_ = cvar;
      best_x_ = x;
    }
  }

  void Trace() {
    if (!config_.trace) return;
    config_.trace({result_.iterations, upper_bound_, lower_bound_,
                   result_.cuts_added, result_.nodes_total, Elapsed()});
  }

  std::optional<SolveStatus> LimitHit() const {
    if (Elapsed() >= config_.time_limit) return SolveStatus::kTimeLimit;
    if (result_.iterations >= config_.iteration_limit) {
      return SolveStatus::kIterationLimit;
    }
    return std::nullopt;
  }

  void RunLoop() {
    std::unordered_set<Selection, SelectionHash> seen;
    while (true) {
      if (auto limit = LimitHit()) {
        result_.status = *limit;
        return;
      }
      const MasterSolution master = SolveMaster(result_.pool, config_.region);
      result_.nodes_total += master.nodes;
      ++result_.iterations;
      upper_bound_ = std::min(upper_bound_, master.psi);
      Observe(master.x, oracle_.Evaluate(master.x, alpha()));
      Trace();
      if (upper_bound_ - lower_bound_ <= config_.risk.epsilon) {
        result_.status = SolveStatus::kOptimal;
        return;
      }
      // A tight cut at x makes the master value there at most CVaR(x), so
      // a revisited incumbent with a gap means some cut was not tight.
      if (!seen.insert(master.x).second) {
        throw std::logic_error("incumbent " + master.x.ToString() +
                               " repeated with an open gap");
      }
      AddCuts(master.x);
    }
  }

  void RunLazy() {
    double max_accepted = -std::numeric_limits<double>::infinity();
    std::optional<SolveStatus> limit;
    SearchHooks hooks;
    hooks.should_stop = [&] {
      limit = LimitHit();
      return limit.has_value();
    };
    hooks.on_leaf = [&](const Selection& x, double psi) {
      ++result_.iterations;
      const double cvar = oracle_.Evaluate(x, alpha());
      Observe(x, cvar);
      if (psi - cvar > config_.risk.epsilon) {
        AddCuts(x);
      } else {
        max_accepted = std::max(max_accepted, psi);
      }
      Trace();
      return cvar;
    };
    const SearchOutcome outcome =
        SearchMaster(result_.pool, config_.region, hooks);
    result_.nodes_total += outcome.best.nodes;
    if (outcome.completed) {
      result_.status = SolveStatus::kOptimal;
      upper_bound_ = std::max(
          {lower_bound_, max_accepted, outcome.max_pruned_bound});
    } else {
      result_.status = limit.value_or(SolveStatus::kTimeLimit);
      upper_bound_ = RelaxationBound();
    }
  }

  // Root bound of the master: min over cuts of constant + top-k coefficients.
  double RelaxationBound() const {
    const int take = std::min(config_.region.k, n_);
    double bound = std::numeric_limits<double>::infinity();
    const CutPool& pool = result_.pool;
    for (int c = 0; c < pool.size(); ++c) {
      double value = pool[c].constant;
      const std::vector<int>& order = pool.DescendingOrder(c);
      for (int t = 0; t < take; ++t) value += pool[c].coeffs(order[t]);
      bound = std::min(bound, value);
    }
    return bound;
  }

  const CvarOracle& oracle_;
  const SolveConfig& config_;
  const int n_;
  std::optional<LShapedCutGenerator> lshaped_;
  Clock::time_point start_;
  SolveResult result_;
  Selection best_x_;
  double lower_bound_ = -std::numeric_limits<double>::infinity();
  double upper_bound_ = std::numeric_limits<double>::infinity();
};

}  // namespace

SolveResult SolveRasm(const CvarOracle& oracle, const SolveConfig& config) {
  config.Validate(oracle.ground_set_size());
  return Driver(oracle, config).Run();
}

int64_t CountSupports(int n, int k) {
  constexpr int64_t kMax = std::numeric_limits<int64_t>::max();
  int64_t total = 0;
  int64_t binom = 1;  // C(n, i)
  for (int i = 0; i <= std::min(k, n); ++i) {
    if (total > kMax - binom) return kMax;
    total += binom;
    if (i < n) {
      // C(n, i+1) = C(n, i) (n - i) / (i + 1); guard the multiplication.
      if (binom > kMax / (n - i)) {
        binom = kMax;
      } else {
        binom = binom * (n - i) / (i + 1);
      }
    }
  }
  return total;
}

namespace {

template <typename Fn>
void ForEachSupport(int n, int k, int start, Selection& x, int size, Fn& fn) {
  fn(x);
  if (size == k) return;
  for (int j = start; j < n; ++j) {
    x.Set(j);
    ForEachSupport(n, k, j + 1, x, size + 1, fn);
    x.Reset(j);
  }
}

}  // namespace

SolveResult SolveExhaustive(const CvarOracle& oracle,
                            const FeasibleRegion& region, double alpha) {
  CheckAlpha(alpha);
  const int n = oracle.ground_set_size();
  region.Validate(n);
  if (CountSupports(n, region.k) > kExhaustiveMaxSupports) {
    throw CapacityError("exhaustive search limited to " +
                        std::to_string(kExhaustiveMaxSupports) + " supports");
  }
  const auto start = Clock::now();
  SolveResult result;
  result.pool = CutPool(n);
  double best = -std::numeric_limits<double>::infinity();
  Selection x(n);
  auto visit = [&](const Selection& candidate) {
    ++result.iterations;
    const double value = oracle.Evaluate(candidate, alpha);
    if (result.iterations == 1 || value > best + kValueTolerance) {
      best = value;
      result.x_best = candidate;
    }
  };
  ForEachSupport(n, region.k, 0, x, 0, visit);
  result.cvar_best = best;
  result.upper_bound = best;
  result.status = SolveStatus::kOptimal;
  result.wall_time =
      std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

}  // namespace rasm
