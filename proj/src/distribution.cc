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

namespace rasm {

Eigen::VectorXd ItemCoverageProbs(const CoverageInstance& instance,
                                  const Selection& x) {
  if (x.size() != instance.num_sets()) {
    throw ParameterError("selection has dimension " + std::to_string(x.size()) +
                         ", instance has n=" +
                         std::to_string(instance.num_sets()));
  }
  Eigen::ArrayXd miss = Eigen::ArrayXd::Ones(instance.num_items());
  for (int i : x.Support()) {
    miss *= 1.0 - instance.probs().row(i).transpose().array();
  }
  return (1.0 - miss).matrix().cwiseMax(0.0).cwiseMin(1.0);
}

}  // namespace rasm
