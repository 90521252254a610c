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

// Value-at-risk, conditional value-at-risk and expectation of
// integer-valued outcomes, and the CVaR oracle abstraction consumed by the
// cut generators and the solver. Larger outcomes are better: CVaR_alpha is
// the mean of the worst alpha-fraction of outcomes.

#ifndef RASM_RISK_H_
#define RASM_RISK_H_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <memory>

#include "rasm/distribution.h"
#include "rasm/instance.h"
#include "rasm/selection.h"

namespace rasm {

// Absolute tolerance for comparing CVaR values.
inline constexpr double kValueTolerance = 1e-9;

struct RiskParams {
  double alpha = 0.05;
  double epsilon = 1e-6;

  void Validate() const;
};

inline void CheckAlpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw ParameterError("alpha must lie in (0, 1]");
  }
}

// Smallest j with P(count <= j) >= alpha.
template <typename Scalar>
int VarAlpha(const BasicPmf<Scalar>& pmf, double alpha) {
  CheckAlpha(alpha);
  Scalar acc(0);
  for (Eigen::Index j = 0; j < pmf.mass.size(); ++j) {
    acc += pmf.mass(j);
    if (acc >= Scalar(alpha)) return static_cast<int>(j);
  }
  // Cumulative round-off below 1 at alpha == 1.
  return pmf.max_value();
}

// Closed form at eta = VaR:
//   v (1 - (1/alpha) sum_{j<v} P(j)) + (1/alpha) sum_{j<v} j P(j).
template <typename Scalar>
Scalar CvarAlpha(const BasicPmf<Scalar>& pmf, double alpha) {
  const int v = VarAlpha(pmf, alpha);
  Scalar below(0);
  Scalar weighted(0);
  for (int j = 0; j < v; ++j) {
    below += pmf.mass(j);
    weighted += Scalar(j) * pmf.mass(j);
  }
  const Scalar inv = Scalar(1) / Scalar(alpha);
  return Scalar(v) * (Scalar(1) - inv * below) + inv * weighted;
}

// Scans eta over the support {0..m} of
//   eta - (1/alpha) E[eta - count]_+ ,
// a concave piecewise-linear function with breakpoints on the integers.
template <typename Scalar>
Scalar CvarBruteforce(const BasicPmf<Scalar>& pmf, double alpha) {
  CheckAlpha(alpha);
  const Scalar inv = Scalar(1) / Scalar(alpha);
  Scalar best = -std::numeric_limits<Scalar>::infinity();
  for (int eta = 0; eta <= pmf.max_value(); ++eta) {
    Scalar shortfall(0);
    for (int j = 0; j < eta; ++j) shortfall += pmf.mass(j) * Scalar(eta - j);
    best = std::max(best, Scalar(eta) - inv * shortfall);
  }
  return best;
}

template <typename Scalar>
Scalar Expectation(const BasicPmf<Scalar>& pmf) {
  Scalar acc(0);
  for (Eigen::Index j = 0; j < pmf.mass.size(); ++j) {
    acc += Scalar(j) * pmf.mass(j);
  }
  return acc;
}

// Exact CVaR_alpha(sigma(x)) for a random monotone submodular sigma.
// Implementations must be safe for concurrent Evaluate calls.
class CvarOracle {
 public:
  virtual ~CvarOracle() = default;

  virtual int ground_set_size() const = 0;
  virtual double Evaluate(const Selection& x, double alpha) const = 0;
};

// Oracle for the independent coverage model: item probabilities, then the
// Poisson-binomial recursion, then the closed-form CVaR. O(nm + m^2) per
// uncached call; results are memoized per (support, alpha) in a sharded
// LRU cache.
class RascOracle final : public CvarOracle {
 public:
  static constexpr std::size_t kDefaultCacheCapacity = std::size_t{1} << 20;

  explicit RascOracle(CoverageInstance instance,
                      std::size_t cache_capacity = kDefaultCacheCapacity);
  ~RascOracle() override;

  int ground_set_size() const override { return instance_.num_sets(); }
  double Evaluate(const Selection& x, double alpha) const override;

  Pmf Distribution(const Selection& x) const;
  const CoverageInstance& instance() const { return instance_; }

  // Uncached evaluations performed so far.
  int64_t evaluations() const { return evaluations_.load(); }
  int64_t cache_hits() const { return cache_hits_.load(); }

 private:
  class Cache;

  CoverageInstance instance_;
  std::unique_ptr<Cache> cache_;
  mutable std::atomic<int64_t> evaluations_{0};
  mutable std::atomic<int64_t> cache_hits_{0};
};

}  // namespace rasm

#endif  // RASM_RISK_H_
