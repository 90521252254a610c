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

#ifndef RASM_SELECTION_H_
#define RASM_SELECTION_H_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace rasm {

// Characteristic vector of a subset of the ground set {0, ..., n-1}.
// Stored as packed 64-bit words so it can serve directly as a memo key.
class Selection {
 public:
  Selection() = default;
  explicit Selection(int n) : n_(n), words_((n + 63) / 64, 0) {}

  static Selection Empty(int n) { return Selection(n); }
  static Selection Full(int n) {
    Selection s(n);
    for (int i = 0; i < n; ++i) s.Set(i);
    return s;
  }
  static Selection FromSupport(int n, std::initializer_list<int> support) {
    return FromSupport(n, std::vector<int>(support));
  }
  static Selection FromSupport(int n, const std::vector<int>& support);

  // Bits are read as x_i = (bits[i] != 0).
  template <typename Derived>
  static Selection FromBits(const Eigen::DenseBase<Derived>& bits) {
    Selection s(static_cast<int>(bits.size()));
    for (Eigen::Index i = 0; i < bits.size(); ++i) {
      if (bits(i) != 0) s.Set(static_cast<int>(i));
    }
    return s;
  }

  int size() const { return n_; }

  bool Test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void Set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void Reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  // Copy with element j added (x + e_j).
  Selection With(int j) const {
    Selection s = *this;
    s.Set(j);
    return s;
  }

  int Count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool IsEmpty() const { return Count() == 0; }

  // Sorted list of selected indices.
  std::vector<int> Support() const;
  // Sorted list of unselected indices (V \ X).
  std::vector<int> Complement() const;

  // True if every element of *this is in other.
  bool IsSubsetOf(const Selection& other) const;

  Eigen::VectorXd ToVector() const;
  // "{0,3,5}"
  std::string ToString() const;

  const std::vector<uint64_t>& words() const { return words_; }
  std::size_t Hash() const;

  friend bool operator==(const Selection& a, const Selection& b) = default;

 private:
  int n_ = 0;
  std::vector<uint64_t> words_;
};

// Lexicographic order on sorted support lists: {0} < {0,1} < {0,2} < {1}.
bool SupportLess(const Selection& a, const Selection& b);

struct SelectionHash {
  std::size_t operator()(const Selection& s) const { return s.Hash(); }
};

}  // namespace rasm

#endif  // RASM_SELECTION_H_
