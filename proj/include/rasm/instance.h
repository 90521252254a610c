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

// Risk-averse set covering data: n candidate sets, m items, and an n x m
// matrix of independent coverage probabilities. Set i covers item j with
// probability probs(i, j), independently of every other (set, item) pair.

#ifndef RASM_INSTANCE_H_
#define RASM_INSTANCE_H_

#include <cstdint>
#include <iosfwd>
#include <string>

#include <Eigen/Core>

namespace rasm {

using ProbMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

class CoverageInstance {
 public:
  // Throws ParameterError if a dimension is zero or a probability lies
  // outside [0, 1].
  explicit CoverageInstance(ProbMatrix probs);

  int num_sets() const { return static_cast<int>(probs_.rows()); }
  int num_items() const { return static_cast<int>(probs_.cols()); }
  const ProbMatrix& probs() const { return probs_; }
  double prob(int set, int item) const { return probs_(set, item); }

  friend bool operator==(const CoverageInstance& a,
                         const CoverageInstance& b) {
    return a.probs_.rows() == b.probs_.rows() &&
           a.probs_.cols() == b.probs_.cols() && a.probs_ == b.probs_;
  }

 private:
  ProbMatrix probs_;
};

// Cardinality budget: at most k selected sets.
struct FeasibleRegion {
  int k = 1;

  // Requires 0 <= k <= n. k = 0 is accepted so that the degenerate
  // problem (only the empty selection) can be posed.
  void Validate(int n) const;
};

struct GeneratorParams {
  int n = 25;
  int m = 25;
  double prob_low = 0.05;
  double prob_high = 0.20;
  uint64_t seed = 1;
};

// Every a_ij drawn i.i.d. uniform on [prob_low, prob_high] from a
// splitmix-seeded mt19937_64 stream. The mapping from 64-bit draws to
// doubles is done by hand so the matrix is identical on every platform.
CoverageInstance GenerateInstance(const GeneratorParams& params);

// Text format:
//   rasc <n> <m>
//   <m probabilities>    (n lines)
// Probabilities are written with 17 significant digits, which round-trips
// every double exactly. '#' starts a comment that runs to end of line.
void SaveInstance(const CoverageInstance& instance, std::ostream& out);
void SaveInstance(const CoverageInstance& instance, const std::string& path);

// Throws ParseError with the line and column of the first problem.
CoverageInstance LoadInstance(std::istream& in);
CoverageInstance LoadInstance(const std::string& path);

}  // namespace rasm

#endif  // RASM_INSTANCE_H_
