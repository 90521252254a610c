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

// Test-only oracles. Everything here is deliberately naive and shares no
// code path with the library routines it is used to check.

#ifndef RASM_TESTS_TEST_ORACLES_H_
#define RASM_TESTS_TEST_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "rasm/cuts.h"
#include "rasm/instance.h"
#include "rasm/selection.h"

namespace rasm::testing {

inline CoverageInstance RandomInstance(std::mt19937_64& rng, int n, int m,
                                       double low = 0.0, double high = 1.0) {
  std::uniform_real_distribution<double> draw(low, high);
  ProbMatrix probs(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) probs(i, j) = draw(rng);
  }
  return CoverageInstance(std::move(probs));
}

// Every selection of size <= k, built bit by bit from an integer counter.
inline std::vector<Selection> AllSupports(int n, int k) {
  std::vector<Selection> out;
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    if (__builtin_popcount(mask) > k) continue;
    Selection s(n);
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) s.Set(i);
    }
    out.push_back(s);
  }
  return out;
}

// Raw coverage-count distribution by enumerating every joint outcome of the
// arcs leaving the selected sets. Needs |X| * m <= 22.
inline std::vector<double> CoverageCountByArcEnumeration(
    const CoverageInstance& inst, const Selection& x) {
  const std::vector<int> sets = x.Support();
  const int m = inst.num_items();
  const int arcs = static_cast<int>(sets.size()) * m;
  if (arcs > 22) throw std::length_error("too many arcs to enumerate");
  std::vector<double> mass(m + 1, 0.0);
  for (uint64_t outcome = 0; outcome < (uint64_t{1} << arcs); ++outcome) {
    double prob = 1.0;
    std::vector<bool> covered(m, false);
    for (int s = 0; s < static_cast<int>(sets.size()); ++s) {
      for (int j = 0; j < m; ++j) {
        const bool up = (outcome >> (s * m + j)) & 1u;
        const double a = inst.prob(sets[s], j);
        prob *= up ? a : 1.0 - a;
        if (up) covered[j] = true;
      }
    }
    mass[std::count(covered.begin(), covered.end(), true)] += prob;
  }
  return mass;
}

// CVaR of a discrete distribution on {0..m} straight from the tail-mean
// definition: average of the lowest alpha probability mass.
inline double TailMean(const std::vector<double>& mass, double alpha) {
  double filled = 0.0;
  double acc = 0.0;
  for (std::size_t j = 0; j < mass.size() && filled < alpha; ++j) {
    const double take = std::min(mass[j], alpha - filled);
    acc += take * static_cast<double>(j);
    filled += take;
  }
  if (filled < alpha) acc += (alpha - filled) * static_cast<double>(mass.size() - 1);
  return acc / alpha;
}

inline double PoolValue(const std::vector<Cut>& cuts, const Selection& x) {
  double value = std::numeric_limits<double>::infinity();
  for (const Cut& cut : cuts) {
    double rhs = cut.constant;
    for (int j = 0; j < x.size(); ++j) {
      if (x.Test(j)) rhs += cut.coeffs(j);
    }
    value = std::min(value, rhs);
  }
  return value;
}

// max over |X| <= k of min over cuts.
inline double ExhaustiveMasterValue(const std::vector<Cut>& cuts, int n, int k) {
  double best = -std::numeric_limits<double>::infinity();
  for (const Selection& x : AllSupports(n, k)) {
    best = std::max(best, PoolValue(cuts, x));
  }
  return best;
}

}  // namespace rasm::testing

#endif  // RASM_TESTS_TEST_ORACLES_H_
