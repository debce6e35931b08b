/*
 * Copyright 2026 The intervalroc Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "intervalroc/interval.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "intervalroc/errors.hpp"

namespace intervalroc {
namespace {

TEST(IntervalPrediction, KeepsEndpoints) {
  const auto i = make_interval(0.25, 0.65);
  EXPECT_EQ(i.lower(), 0.25);
  EXPECT_EQ(i.upper(), 0.65);
  EXPECT_FALSE(i.is_point());
}

TEST(IntervalPrediction, AllowsDegeneratePoint) {
  const auto i = make_interval(0.4, 0.4);
  EXPECT_TRUE(i.is_point());
  EXPECT_EQ(i.width(), 0.0);
}

TEST(IntervalPrediction, RejectsReversedEndpoints) {
  EXPECT_THROW(make_interval(0.7, 0.3), ContractError);
}

TEST(IntervalPrediction, RejectsNonFinite) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(make_interval(0.1, inf), ContractError);
  EXPECT_THROW(make_interval(std::nan(""), 0.5), ContractError);
}

TEST(IntervalPrediction, OutsideUnitRangeIsAllowed) {
  EXPECT_NO_THROW(make_interval(-3.0, 12.5));
}

TEST(ComparePair, StrictRules) {
  EXPECT_EQ(compare_pair({0.6, 0.8}, {0.1, 0.2}), PairOrdering::kStrictlyAbove);
  EXPECT_EQ(compare_pair({0.6, 0.8}, {0.4, 0.7}), PairOrdering::kOverlap);
  EXPECT_EQ(compare_pair({0.1, 0.2}, {0.6, 0.8}), PairOrdering::kStrictlyBelow);
}

TEST(ComparePair, SharedEndpointIsOverlap) {
  EXPECT_EQ(compare_pair({0.2, 0.4}, {0.4, 0.5}), PairOrdering::kOverlap);
  EXPECT_EQ(compare_pair({0.4, 0.5}, {0.2, 0.4}), PairOrdering::kOverlap);
}

TEST(CompareThreshold, ThreeSides) {
  const auto i = make_interval(0.25, 0.65);
  EXPECT_EQ(compare_threshold(i, 0.2), ThresholdSide::kAbove);
  EXPECT_EQ(compare_threshold(i, 0.45), ThresholdSide::kContains);
  EXPECT_EQ(compare_threshold(i, 0.7), ThresholdSide::kBelow);
  EXPECT_EQ(compare_threshold(i, 0.25), ThresholdSide::kContains);
  EXPECT_EQ(compare_threshold(i, 0.65), ThresholdSide::kContains);
}

TEST(ComparePair, TrichotomyAndAntisymmetryOnRandomPairs) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> grid(0, 8);  // coarse grid: many ties
  for (int trial = 0; trial < 20000; ++trial) {
    int a0 = grid(rng), a1 = grid(rng), b0 = grid(rng), b1 = grid(rng);
    if (a0 > a1) std::swap(a0, a1);
    if (b0 > b1) std::swap(b0, b1);
    const IntervalPrediction a(a0 / 8.0, a1 / 8.0), b(b0 / 8.0, b1 / 8.0);
    const auto ab = compare_pair(a, b);
    const auto ba = compare_pair(b, a);
    const int cases = (a.lower() > b.upper()) + (a.upper() < b.lower()) +
                      (!(a.lower() > b.upper()) && !(a.upper() < b.lower()));
    ASSERT_EQ(cases, 1);
    ASSERT_EQ(ab == PairOrdering::kStrictlyAbove, ba == PairOrdering::kStrictlyBelow);
    ASSERT_EQ(ab == PairOrdering::kOverlap, ba == PairOrdering::kOverlap);
  }
}

TEST(ComparePair, DistinctPointsNeverOverlap) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 5000; ++trial) {
    const double x = u(rng), y = u(rng);
    if (x == y) continue;
    const auto ord = compare_pair(IntervalPrediction::point(x), IntervalPrediction::point(y));
    ASSERT_EQ(ord, x > y ? PairOrdering::kStrictlyAbove : PairOrdering::kStrictlyBelow);
  }
}

TEST(ClassedIntervalDataset, FromLabeled) {
  const std::vector<int> labels = {1, 0, 1};
  const std::vector<IntervalPrediction> iv = {{0.5, 0.6}, {0.1, 0.2}, {0.7, 0.9}};
  const auto data = ClassedIntervalDataset::from_labeled(labels, iv);
  EXPECT_EQ(data.n_pos(), 2u);
  EXPECT_EQ(data.n_neg(), 1u);
  EXPECT_EQ(data.negatives[0], IntervalPrediction(0.1, 0.2));
}

TEST(ClassedIntervalDataset, FromLabeledRejectsBadInput) {
  const std::vector<IntervalPrediction> iv = {{0.5, 0.6}};
  const std::vector<int> two = {1, 0};
  const std::vector<int> bad = {2};
  EXPECT_THROW(ClassedIntervalDataset::from_labeled(two, iv), ContractError);
  EXPECT_THROW(ClassedIntervalDataset::from_labeled(bad, iv), ContractError);
}

TEST(ClassedIntervalDataset, RequireBothClasses) {
  ClassedIntervalDataset data;
  data.positives.push_back({0.1, 0.2});
  EXPECT_THROW(data.require_both_classes(), ContractError);
  data.negatives.push_back({0.1, 0.2});
  EXPECT_NO_THROW(data.require_both_classes());
}

}  // namespace
}  // namespace intervalroc
