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

#include <unordered_set>

#include "gtest/gtest.h"
#include "rasm/errors.h"

namespace rasm {
namespace {

TEST(SelectionTest, Basics) {
  Selection s(70);
  EXPECT_TRUE(s.IsEmpty());
  s.Set(3);
  s.Set(69);
  EXPECT_TRUE(s.Test(69));
  EXPECT_FALSE(s.Test(64));
  EXPECT_EQ(s.Count(), 2);
  EXPECT_EQ(s.Support(), (std::vector<int>{3, 69}));
  EXPECT_EQ(s.Complement().size(), 68u);
  s.Reset(3);
  EXPECT_EQ(s.Support(), (std::vector<int>{69}));
  EXPECT_EQ(Selection::Full(70).Count(), 70);
}

TEST(SelectionTest, WithLeavesOriginal) {
  const Selection s = Selection::FromSupport(5, {1});
  const Selection t = s.With(4);
  EXPECT_EQ(s.Count(), 1);
  EXPECT_EQ(t.Support(), (std::vector<int>{1, 4}));
  EXPECT_TRUE(s.IsSubsetOf(t));
  EXPECT_FALSE(t.IsSubsetOf(s));
}

TEST(SelectionTest, FromSupportRangeChecked) {
  EXPECT_THROW(Selection::FromSupport(3, {3}), ParameterError);
  EXPECT_THROW(Selection::FromSupport(3, {-1}), ParameterError);
}

TEST(SelectionTest, Conversions) {
  const Selection s = Selection::FromSupport(4, {0, 2});
  EXPECT_EQ(s.ToString(), "{0,2}");
  EXPECT_EQ(Selection(2).ToString(), "{}");
  const Eigen::VectorXd v = s.ToVector();
  EXPECT_EQ(v, Eigen::Vector4d(1, 0, 1, 0));
  EXPECT_EQ(Selection::FromBits(v), s);
}

TEST(SelectionTest, OrderingAndHashing) {
  const Selection a = Selection::FromSupport(4, {0, 3});
  const Selection b = Selection::FromSupport(4, {1});
  const Selection c = Selection::FromSupport(4, {0});
  EXPECT_TRUE(SupportLess(a, b));
  EXPECT_TRUE(SupportLess(c, a));
  EXPECT_FALSE(SupportLess(a, a));
  std::unordered_set<Selection, SelectionHash> set{a, b, c, a};
  EXPECT_EQ(set.size(), 3u);
}

}  // namespace
}  // namespace rasm
