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

#include "rasm/selection.h"

#include <algorithm>

#include "rasm/errors.h"

namespace rasm {

Selection Selection::FromSupport(int n, const std::vector<int>& support) {
  Selection s(n);
  for (int i : support) {
    if (i < 0 || i >= n) {
      throw ParameterError("support index " + std::to_string(i) +
                           " outside ground set of size " + std::to_string(n));
    }
    s.Set(i);
  }
  return s;
}

std::vector<int> Selection::Support() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    if (Test(i)) out.push_back(i);
  }
  return out;
}

std::vector<int> Selection::Complement() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    if (!Test(i)) out.push_back(i);
  }
  return out;
}

bool Selection::IsSubsetOf(const Selection& other) const {
  if (other.n_ != n_) return false;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

Eigen::VectorXd Selection::ToVector() const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n_);
  for (int i = 0; i < n_; ++i) {
    if (Test(i)) v(i) = 1.0;
  }
  return v;
}

std::string Selection::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int i : Support()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::size_t Selection::Hash() const {
  // splitmix-style mixing over the packed words.
  uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(n_);
  for (uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

bool SupportLess(const Selection& a, const Selection& b) {
  const std::vector<int> sa = a.Support();
  const std::vector<int> sb = b.Support();
  return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(),
                                      sb.end());
}

}  // namespace rasm
