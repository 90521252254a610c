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

#include "rasm/cuts.h"

#include <cstdio>
#include <limits>

#include "rasm/errors.h"
#include "src/parallel.h"

namespace rasm {

namespace {

void CheckDimension(const CvarOracle& oracle, const Selection& xbar) {
  if (xbar.size() != oracle.ground_set_size()) {
    throw ParameterError("incumbent has dimension " +
                         std::to_string(xbar.size()) + ", oracle expects " +
                         std::to_string(oracle.ground_set_size()));
  }
}

double Clamp(double coeff) { return coeff < kCoeffClamp ? 0.0 : coeff; }

Cut MakeCut(CutFamily family, const Selection& xbar, double constant) {
  Cut cut;
  cut.family = family;
  cut.constant = constant;
  cut.coeffs = Eigen::VectorXd::Zero(xbar.size());
  cut.incumbent = xbar;
  return cut;
}

}  // namespace

std::string_view CutFamilyName(CutFamily family) {
  switch (family) {
    case CutFamily::kLShaped:
      return "lshaped";
    case CutFamily::kNewCut:
      return "new";
    case CutFamily::kLifted:
      return "lifted";
  }
  return "unknown";
}

std::optional<CutFamily> ParseCutFamily(std::string_view name) {
  if (name == "lshaped") return CutFamily::kLShaped;
  if (name == "new") return CutFamily::kNewCut;
  if (name == "lifted") return CutFamily::kLifted;
  return std::nullopt;
}

double Rhs(const Cut& cut, const Selection& x) {
  if (x.size() != cut.size()) {
    throw ParameterError("selection dimension does not match cut");
  }
  double value = cut.constant;
  for (int j : x.Support()) value += cut.coeffs(j);
  return value;
}

std::string ToDebugString(const Cut& cut) {
  std::string out(CutFamilyName(cut.family));
  char buf[64];
  std::snprintf(buf, sizeof(buf), " %.17g", cut.constant);
  out += buf;
  for (int j = 0; j < cut.size(); ++j) {
    if (cut.coeffs(j) == 0.0) continue;
    std::snprintf(buf, sizeof(buf), " %d:%.17g", j, cut.coeffs(j));
    out += buf;
  }
  return out;
}

LShapedCutGenerator::LShapedCutGenerator(const CvarOracle& oracle)
    : oracle_(oracle),
      full_expectation_(
          oracle.Evaluate(Selection::Full(oracle.ground_set_size()), 1.0)) {}

Cut LShapedCutGenerator::Generate(const Selection& xbar, double alpha) const {
  CheckDimension(oracle_, xbar);
  const double base = oracle_.Evaluate(xbar, alpha);
  Cut cut = MakeCut(CutFamily::kLShaped, xbar, base);
  const double coeff = Clamp(full_expectation_ - base);
  for (int j : xbar.Complement()) cut.coeffs(j) = coeff;
  return cut;
}

Cut LShapedCut(const CvarOracle& oracle, const Selection& xbar, double alpha) {
  return LShapedCutGenerator(oracle).Generate(xbar, alpha);
}

Cut NewCut(const CvarOracle& oracle, const Selection& xbar, double alpha) {
  CheckDimension(oracle, xbar);
  const double base = oracle.Evaluate(xbar, alpha);
  Cut cut = MakeCut(CutFamily::kNewCut, xbar, base);
  for (int j : xbar.Complement()) {
    cut.coeffs(j) = Clamp(oracle.Evaluate(xbar.With(j), 1.0) - base);
  }
  return cut;
}

LiftingResult GreedyLift(const CvarOracle& oracle, const Selection& xbar,
                         double alpha, int threads) {
  CheckDimension(oracle, xbar);
  const double base = oracle.Evaluate(xbar, alpha);
  LiftingResult result{MakeCut(CutFamily::kLifted, xbar, base), {}};
  std::vector<int> remaining = xbar.Complement();
  result.order.reserve(remaining.size());
  Selection prefix = xbar;
  std::vector<double> values;
  while (!remaining.empty()) {
    values.assign(remaining.size(), 0.0);
    internal::ParallelFor(remaining.size(), threads, [&](std::size_t c) {
      values[c] = oracle.Evaluate(prefix.With(remaining[c]), alpha);
    });
    // remaining is sorted, so the first minimum is the smallest index.
    std::size_t pick = 0;
    for (std::size_t c = 1; c < remaining.size(); ++c) {
      if (values[c] < values[pick]) pick = c;
    }
    const int chosen = remaining[pick];
    prefix.Set(chosen);
    result.cut.coeffs(chosen) = Clamp(values[pick] - base);
    result.order.push_back(chosen);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return result;
}

Cut GreedyLiftedCut(const CvarOracle& oracle, const Selection& xbar,
                    double alpha, int threads) {
  return GreedyLift(oracle, xbar, alpha, threads).cut;
}

Cut GenerateCut(CutFamily family, const CvarOracle& oracle,
                const Selection& xbar, double alpha, int threads) {
  switch (family) {
    case CutFamily::kLShaped:
      return LShapedCut(oracle, xbar, alpha);
    case CutFamily::kNewCut:
      return NewCut(oracle, xbar, alpha);
    case CutFamily::kLifted:
      return GreedyLiftedCut(oracle, xbar, alpha, threads);
  }
  throw ParameterError("unknown cut family");
}

namespace {

// Visits every subset of `pool` of size <= max_size, with `chosen` holding
// the positions currently in the subset.
template <typename Fn>
void ForEachSmallSubset(const std::vector<int>& pool, int max_size,
                        std::size_t start, std::vector<int>& chosen, Fn& fn) {
  fn(chosen);
  if (static_cast<int>(chosen.size()) == max_size) return;
  for (std::size_t p = start; p < pool.size(); ++p) {
    chosen.push_back(pool[p]);
    ForEachSmallSubset(pool, max_size, p + 1, chosen, fn);
    chosen.pop_back();
  }
}

}  // namespace

ExactLifting ExactLiftingCoefficients(const CvarOracle& oracle,
                                      const Selection& xbar, double alpha,
                                      const std::vector<int>& order,
                                      const FeasibleRegion& region) {
  CheckDimension(oracle, xbar);
  const int n = xbar.size();
  if (n > kExactLiftingMaxSets) {
    throw CapacityError("exact lifting limited to n <= " +
                        std::to_string(kExactLiftingMaxSets));
  }
  region.Validate(n);
  const std::vector<int> complement = xbar.Complement();
  {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != complement) {
      throw ParameterError("lifting order must be a permutation of V \\ X");
    }
  }
  const double base = oracle.Evaluate(xbar, alpha);
  const int r = static_cast<int>(order.size());
  ExactLifting out{Eigen::VectorXd::Zero(r), std::vector<bool>(r, false)};
  Eigen::VectorXd delta_of = Eigen::VectorXd::Zero(n);

  std::vector<int> free_vars = xbar.Support();
  Selection relaxed = xbar;
  std::vector<int> chosen;
  for (int t = 0; t < r; ++t) {
    const int lifted = order[t];
    relaxed.Set(lifted);
    // No point of the region extends xbar by j_t. The lifting problem then
    // only sees points that drop part of xbar and can go negative.
    if (xbar.Count() + 1 > region.k) {
      out.infeasible[t] = true;
      out.delta(t) = oracle.Evaluate(relaxed, alpha) - base;
    } else {
      double best = -std::numeric_limits<double>::infinity();
      auto visit = [&](const std::vector<int>& subset) {
        Selection x(n);
        x.Set(lifted);
        double penalty = 0.0;
        for (int i : subset) {
          x.Set(i);
          penalty += delta_of(i);
        }
        best = std::max(best, oracle.Evaluate(x, alpha) - penalty);
      };
      ForEachSmallSubset(free_vars, region.k - 1, 0, chosen, visit);
      out.delta(t) = best - base;
    }
    delta_of(lifted) = out.delta(t);
    free_vars.push_back(lifted);
  }
  return out;
}

}  // namespace rasm
