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

#include "rasm/distribution.h"

#include <random>

#include "gtest/gtest.h"
#include "rasm/errors.h"
#include "rasm/risk.h"
#include "test_oracles.h"

namespace rasm {
namespace {

Eigen::VectorXd Vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

Eigen::VectorXd RandomQ(std::mt19937_64& rng, int m) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> kind(0, 9);
  Eigen::VectorXd q(m);
  for (int j = 0; j < m; ++j) {
    // Mix in exact 0/1 entries so degenerate items are exercised.
    const int c = kind(rng);
    q(j) = c == 0 ? 0.0 : c == 1 ? 1.0 : unit(rng);
  }
  return q;
}

TEST(ItemCoverageProbsTest, EmptySelectionCoversNothing) {
  ProbMatrix a(2, 3);
  a << 0.5, 0.2, 0.9, 0.1, 0.3, 0.7;
  const CoverageInstance inst(a);
  EXPECT_TRUE(ItemCoverageProbs(inst, Selection(2)).isZero());
}

TEST(ItemCoverageProbsTest, SingleSetIsItsRow) {
  ProbMatrix a(2, 2);
  a << 0.5, 0.2, 0.9, 0.9;
  const CoverageInstance inst(a);
  const Eigen::VectorXd q =
      ItemCoverageProbs(inst, Selection::FromSupport(2, {0}));
  EXPECT_DOUBLE_EQ(q(0), 0.5);
  EXPECT_DOUBLE_EQ(q(1), 0.2);
}

TEST(ItemCoverageProbsTest, TwoHalfSetsGiveThreeQuarters) {
  ProbMatrix a(2, 1);
  a << 0.5, 0.5;
  const CoverageInstance inst(a);
  const Selection both = Selection::FromSupport(2, {0, 1});
  // Enumerating the four joint outcomes: only (miss, miss) leaves it bare.
  const std::vector<double> mass =
      testing::CoverageCountByArcEnumeration(inst, both);
  EXPECT_DOUBLE_EQ(mass[1], 0.75);
  EXPECT_DOUBLE_EQ(ItemCoverageProbs(inst, both)(0), 0.75);
}

TEST(ItemCoverageProbsTest, DimensionMismatch) {
  const CoverageInstance inst(ProbMatrix::Constant(2, 2, 0.5));
  EXPECT_THROW(ItemCoverageProbs(inst, Selection(3)), ParameterError);
}

TEST(ItemCoverageProbsTest, NondecreasingInSelection) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const CoverageInstance inst = testing::RandomInstance(rng, 6, 5);
    Selection x(6);
    Eigen::VectorXd prev = ItemCoverageProbs(inst, x);
    for (int i : {4, 1, 5, 0}) {
      x.Set(i);
      const Eigen::VectorXd next = ItemCoverageProbs(inst, x);
      EXPECT_TRUE(((next - prev).array() >= 0.0).all());
      prev = next;
    }
  }
}

TEST(CoveragePmfTest, HandValues) {
  EXPECT_TRUE(CoveragePmf(Vec({0.5})).mass.isApprox(Vec({0.5, 0.5})));
  EXPECT_TRUE(
      CoveragePmf(Vec({0.5, 0.5})).mass.isApprox(Vec({0.25, 0.5, 0.25})));
  EXPECT_TRUE(CoveragePmf(Vec({})).mass.isApprox(Vec({1.0})));
}

TEST(CoveragePmfTest, RejectsInvalidProbability) {
  EXPECT_THROW(CoveragePmf(Vec({0.5, 1.2})), ParameterError);
  EXPECT_THROW(CoveragePmf(Vec({-0.1})), ParameterError);
  EXPECT_THROW(PmfBruteforce(Vec({std::nan("")})), ParameterError);
}

TEST(PmfBruteforceTest, HandValues) {
  EXPECT_TRUE(PmfBruteforce(Vec({1.0, 1.0})).mass.isApprox(Vec({0, 0, 1})));
  const Pmf p = PmfBruteforce(Vec({0.0, 0.3}));
  EXPECT_NEAR(p.mass(0), 0.7, 1e-15);
  EXPECT_NEAR(p.mass(1), 0.3, 1e-15);
  EXPECT_EQ(p.mass(2), 0.0);
}

TEST(PmfBruteforceTest, RefusesLargeM) {
  EXPECT_THROW(PmfBruteforce(Eigen::VectorXd::Constant(21, 0.5)),
               CapacityError);
}

TEST(CoveragePmfTest, MatchesEnumerationOnRandomVectors) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick_m(0, 12);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::VectorXd q = RandomQ(rng, pick_m(rng));
    const Pmf dp = CoveragePmf(q);
    const Pmf brute = PmfBruteforce(q);
    ASSERT_EQ(dp.mass.size(), q.size() + 1);
    EXPECT_LE((dp.mass - brute.mass).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(dp.mass.sum(), 1.0, 1e-9);
    EXPECT_GE(dp.mass.minCoeff(), 0.0);
    // Poisson-binomial mean identity.
    EXPECT_NEAR(Expectation(dp), q.sum(), 1e-9);
  }
}

TEST(CoveragePmfTest, MatchesArcEnumerationOnInstances) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const CoverageInstance inst = testing::RandomInstance(rng, 3, 5);
    for (const Selection& x : testing::AllSupports(3, 3)) {
      if (x.Count() * 5 > 15) continue;
      const std::vector<double> raw =
          testing::CoverageCountByArcEnumeration(inst, x);
      const Pmf dp = CoveragePmf(ItemCoverageProbs(inst, x));
      for (int j = 0; j <= 5; ++j) EXPECT_NEAR(dp.mass(j), raw[j], 1e-12);
    }
  }
}

TEST(CoveragePmfTest, LongDoubleAgreesWithDouble) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::VectorXd q = RandomQ(rng, 60);
    const BasicPmf<long double> wide = CoveragePmf(q.cast<long double>());
    const Pmf narrow = CoveragePmf(q);
    EXPECT_LE((wide.mass.cast<double>() - narrow.mass).cwiseAbs().maxCoeff(),
              1e-13);
  }
}

TEST(CoveragePmfTest, StochasticDominanceUnderGrowth) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const CoverageInstance inst = testing::RandomInstance(rng, 5, 8, 0, 0.6);
    const Selection small = Selection::FromSupport(5, {1, 3});
    const Selection large = Selection::FromSupport(5, {0, 1, 3});
    const Eigen::VectorXd f_small =
        CoveragePmf(ItemCoverageProbs(inst, small)).Cumulative();
    const Eigen::VectorXd f_large =
        CoveragePmf(ItemCoverageProbs(inst, large)).Cumulative();
    EXPECT_TRUE(((f_large - f_small).array() <= 1e-12).all());
  }
}

TEST(CvarFromScenariosTest, HandValues) {
  EXPECT_DOUBLE_EQ(CvarFromScenarios(Vec({5}), Vec({1}), 0.05), 5.0);
  EXPECT_DOUBLE_EQ(CvarFromScenarios(Vec({0, 10}), Vec({0.5, 0.5}), 0.5), 0.0);
  EXPECT_DOUBLE_EQ(CvarFromScenarios(Vec({0, 10}), Vec({0.5, 0.5}), 1.0), 5.0);
  // Unsorted input and a fractional boundary atom: tail of 0.3 takes
  // 0.2 at 1 and 0.1 at 4.
  EXPECT_NEAR(CvarFromScenarios(Vec({4, 1, 9}), Vec({0.5, 0.2, 0.3}), 0.3),
              (0.2 * 1 + 0.1 * 4) / 0.3, 1e-15);
}

TEST(CvarFromScenariosTest, Errors) {
  EXPECT_THROW(CvarFromScenarios(Vec({1}), Vec({1}), 0.0), ParameterError);
  EXPECT_THROW(CvarFromScenarios(Vec({1}), Vec({1}), 1.5), ParameterError);
  EXPECT_THROW(CvarFromScenarios(Vec({}), Vec({}), 0.5), ParameterError);
  EXPECT_THROW(CvarFromScenarios(Vec({1, 2}), Vec({0.5, 0.6}), 0.5),
               ParameterError);
  EXPECT_THROW(CvarFromScenarios(Vec({1, 2}), Vec({1.5, -0.5}), 0.5),
               ParameterError);
}

TEST(CvarFromScenariosTest, MatchesEtaScanOnRandomScenarios) {
  // Independent check: the eta objective is piecewise linear with
  // breakpoints at the scenario values, so its max over those values is
  // the LP optimum.
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int count = 1 + static_cast<int>(unit(rng) * 8);
    Eigen::VectorXd values(count), probs(count);
    for (int i = 0; i < count; ++i) {
      values(i) = std::floor(unit(rng) * 5);  // ties on purpose
      probs(i) = unit(rng) + 1e-3;
    }
    probs /= probs.sum();
    for (double alpha : {0.01, 0.1, 0.37, 1.0}) {
      double best = -1e300;
      for (int e = 0; e < count; ++e) {
        double shortfall = 0.0;
        for (int i = 0; i < count; ++i) {
          shortfall += probs(i) * std::max(values(e) - values(i), 0.0);
        }
        best = std::max(best, values(e) - shortfall / alpha);
      }
      EXPECT_NEAR(CvarFromScenarios(values, probs, alpha), best, 1e-9);
    }
  }
}

}  // namespace
}  // namespace rasm
