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

// Exact distribution of the number of covered items under independent
// coverage. The coverage count is Poisson-binomial with success
// probabilities q_j(x) = 1 - prod_{i in X} (1 - a_ij).

#ifndef RASM_DISTRIBUTION_H_
#define RASM_DISTRIBUTION_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rasm/errors.h"
#include "rasm/instance.h"
#include "rasm/selection.h"

namespace rasm {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// mass(j) = P(count == j), j = 0..m.
template <typename Scalar = double>
struct BasicPmf {
  Vector<Scalar> mass;

  int max_value() const { return static_cast<int>(mass.size()) - 1; }
  Vector<Scalar> Cumulative() const {
    Vector<Scalar> cdf(mass.size());
    Scalar acc(0);
    for (Eigen::Index j = 0; j < mass.size(); ++j) {
      acc += mass(j);
      cdf(j) = acc;
    }
    return cdf;
  }
};

using Pmf = BasicPmf<double>;

inline constexpr double kPmfSumTolerance = 1e-9;
inline constexpr int kBruteforceMaxItems = 20;

namespace internal {

template <typename Derived>
void CheckProbabilities(const Eigen::MatrixBase<Derived>& q) {
  for (Eigen::Index j = 0; j < q.size(); ++j) {
    if (!(q(j) >= 0 && q(j) <= 1)) {
      throw ParameterError("coverage probability q[" + std::to_string(j) +
                           "] outside [0,1]");
    }
  }
}

// Clamps round-off negatives and renormalizes; hard error if the total is
// more than kPmfSumTolerance away from one.
template <typename Scalar>
void Normalize(Vector<Scalar>& mass) {
  mass = mass.cwiseMax(Scalar(0));
  const Scalar total = mass.sum();
  using std::abs;
  if (abs(total - Scalar(1)) > Scalar(kPmfSumTolerance)) {
    throw ParameterError("pmf mass sums to " +
                         std::to_string(static_cast<double>(total)));
  }
  mass /= total;
}

}  // namespace internal

// q_j(x) for every item; O(|X| m).
Eigen::VectorXd ItemCoverageProbs(const CoverageInstance& instance,
                                  const Selection& x);

// Poisson-binomial pmf by the rolling recursion
//   A(i, j) = A(i-1, j) (1 - q_i) + A(i-1, j-1) q_i,  A(0, 0) = 1.
template <typename Derived>
BasicPmf<typename Derived::Scalar> CoveragePmf(
    const Eigen::MatrixBase<Derived>& q) {
  using Scalar = typename Derived::Scalar;
  internal::CheckProbabilities(q);
  const Eigen::Index m = q.size();
  Vector<Scalar> mass = Vector<Scalar>::Zero(m + 1);
  mass(0) = Scalar(1);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Scalar p = q(i);
    const Scalar miss = Scalar(1) - p;
    // Update in place from the top so A(i-1, j-1) is still unmodified.
    for (Eigen::Index j = i + 1; j >= 1; --j) {
      mass(j) = mass(j) * miss + mass(j - 1) * p;
    }
    mass(0) *= miss;
  }
  internal::Normalize(mass);
  return {std::move(mass)};
}

// Independent oracle: sums the probability of all 2^m covered/uncovered
// patterns. Refuses m > kBruteforceMaxItems.
template <typename Derived>
BasicPmf<typename Derived::Scalar> PmfBruteforce(
    const Eigen::MatrixBase<Derived>& q) {
  using Scalar = typename Derived::Scalar;
  internal::CheckProbabilities(q);
  const int m = static_cast<int>(q.size());
  if (m > kBruteforceMaxItems) {
    throw CapacityError("pmf brute force limited to m <= " +
                        std::to_string(kBruteforceMaxItems));
  }
  Vector<Scalar> mass = Vector<Scalar>::Zero(m + 1);
  for (uint32_t pattern = 0; pattern < (uint32_t{1} << m); ++pattern) {
    Scalar prob(1);
    for (int j = 0; j < m; ++j) {
      prob *= ((pattern >> j) & 1u) ? Scalar(q(j)) : Scalar(1) - q(j);
    }
    mass(std::popcount(pattern)) += prob;
  }
  return {std::move(mass)};
}

// max_eta  eta - (1/alpha) sum_i p_i [eta - v_i]_+ , evaluated by sorting
// the scenarios and filling the lower alpha-tail. The boundary scenario
// contributes fractionally.
template <typename DerivedV, typename DerivedP>
typename DerivedV::Scalar CvarFromScenarios(
    const Eigen::MatrixBase<DerivedV>& values,
    const Eigen::MatrixBase<DerivedP>& probs, double alpha) {
  using Scalar = typename DerivedV::Scalar;
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw ParameterError("alpha must lie in (0, 1]");
  }
  const Eigen::Index count = values.size();
  if (count < 1 || probs.size() != count) {
    throw ParameterError("need N >= 1 scenarios with one probability each");
  }
  Scalar total(0);
  for (Eigen::Index i = 0; i < count; ++i) {
    if (probs(i) < 0) throw ParameterError("negative scenario probability");
    total += probs(i);
  }
  using std::abs;
  if (abs(total - Scalar(1)) > Scalar(kPmfSumTolerance)) {
    throw ParameterError("scenario probabilities must sum to 1");
  }
  std::vector<Eigen::Index> order(count);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) {
                     return values(a) < values(b);
                   });
  const Scalar level(alpha);
  Scalar filled(0);
  Scalar acc(0);
  for (Eigen::Index idx : order) {
    if (filled >= level) break;
    const Scalar take = std::min<Scalar>(Scalar(probs(idx)), level - filled);
    if (take <= 0) continue;
    acc += take * values(idx);
    filled += take;
  }
  // Round-off can leave the tail a hair short of alpha when alpha == 1;
  // the last-visited value absorbs it.
  if (filled < level) acc += (level - filled) * values(order.back());
  return acc / level;
}

}  // namespace rasm

#endif  // RASM_DISTRIBUTION_H_
