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

// Optimality cuts psi <= constant + sum_j coeffs[j] x_j generated at an
// incumbent xbar. Every family is tight at xbar (constant is
// CVaR_alpha(sigma(xbar)) and coefficients on the support of xbar are zero)
// and valid for every x: CVaR_alpha(sigma(x)) <= Rhs(cut, x).
//
//   LShaped: coeff_j = CVaR_1(sigma(V)) - CVaR_alpha(sigma(xbar)).
//   NewCut:  coeff_j = CVaR_1(sigma(xbar + e_j)) - CVaR_alpha(sigma(xbar)).
//            The first term is the risk-neutral value; using CVaR_alpha
//            there would give the submodular inequality, which is not
//            valid for alpha < 1.
//   Lifted:  greedy sequential up-lifting. With the complement of xbar
//            ordered j_1..j_r, coeff_{j_t} =
//            CVaR_alpha(sigma(xbar + e_{j_1} + ... + e_{j_t})) - CVaR_alpha(sigma(xbar)).

#ifndef RASM_CUTS_H_
#define RASM_CUTS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "rasm/instance.h"
#include "rasm/risk.h"
#include "rasm/selection.h"

namespace rasm {

enum class CutFamily { kLShaped, kNewCut, kLifted };

std::string_view CutFamilyName(CutFamily family);
// Accepts "lshaped", "new", "lifted".
std::optional<CutFamily> ParseCutFamily(std::string_view name);

// Coefficients below this are stored as exactly zero.
inline constexpr double kCoeffClamp = 1e-12;

struct Cut {
  double constant = 0.0;
  Eigen::VectorXd coeffs;
  CutFamily family = CutFamily::kNewCut;
  Selection incumbent;

  int size() const { return static_cast<int>(coeffs.size()); }
};

// constant + coeffs . x
double Rhs(const Cut& cut, const Selection& x);

// "family constant j:coeff ..." listing the nonzero coefficients.
std::string ToDebugString(const Cut& cut);

// Caches CVaR_1(sigma(V)) across calls for one oracle.
class LShapedCutGenerator {
 public:
  explicit LShapedCutGenerator(const CvarOracle& oracle);

  Cut Generate(const Selection& xbar, double alpha) const;

 private:
  const CvarOracle& oracle_;
  double full_expectation_;
};

Cut LShapedCut(const CvarOracle& oracle, const Selection& xbar, double alpha);

Cut NewCut(const CvarOracle& oracle, const Selection& xbar, double alpha);

struct LiftingResult {
  Cut cut;
  // j_1..j_r, the complement of xbar in greedy order.
  std::vector<int> order;
};

// Step i picks the unplaced s minimizing
// CVaR_alpha(sigma(xbar + e_{j_1} + ... + e_{j_{i-1}} + e_s)); ties go to the
// smallest index. The r - i + 1 candidate evaluations of one step run on up
// to `threads` threads; steps are sequential.
LiftingResult GreedyLift(const CvarOracle& oracle, const Selection& xbar,
                         double alpha, int threads = 1);

Cut GreedyLiftedCut(const CvarOracle& oracle, const Selection& xbar,
                    double alpha, int threads = 1);

// One cut of the requested family.
Cut GenerateCut(CutFamily family, const CvarOracle& oracle,
                const Selection& xbar, double alpha, int threads = 1);

inline constexpr int kExactLiftingMaxSets = 16;

struct ExactLifting {
  // delta[t] is the coefficient of order[t].
  Eigen::VectorXd delta;
  // Positions whose lifting problem is infeasible, which happens for every
  // position once |xbar| + 1 > k; delta there holds the relaxed
  // coefficient instead.
  std::vector<bool> infeasible;
};

// Exact sequential lifting coefficients for the given order of the
// complement of xbar, each lifting problem solved by enumerating the
// feasible region:
//   delta_t = max { CVaR_alpha(sigma(x)) - sum_{i<t} delta_i x_{j_i} :
//                   x_{j_t} = 1, x_{j_i} = 0 for i > t, |X| <= k }
//             - CVaR_alpha(sigma(xbar)).
// Test oracle; refuses n > kExactLiftingMaxSets.
ExactLifting ExactLiftingCoefficients(const CvarOracle& oracle,
                                      const Selection& xbar, double alpha,
                                      const std::vector<int>& order,
                                      const FeasibleRegion& region);

}  // namespace rasm

#endif  // RASM_CUTS_H_
