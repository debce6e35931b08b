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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace intervalroc {

/// An interval-valued risk score [lower, upper].
///
/// Endpoints must be finite with lower <= upper; the constructor throws
/// ContractError otherwise. Endpoints are not restricted to [0, 1] here, the
/// comparison rules work for any real interval.
class IntervalPrediction {
 public:
  IntervalPrediction(double lower, double upper);

  /// Degenerate interval holding a single point score.
  static IntervalPrediction point(double value) { return {value, value}; }

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  double width() const noexcept { return upper_ - lower_; }
  bool is_point() const noexcept { return lower_ == upper_; }
  bool contains(double value) const noexcept {
    return lower_ <= value && value <= upper_;
  }

  friend bool operator==(const IntervalPrediction&,
                         const IntervalPrediction&) = default;

 private:
  double lower_;
  double upper_;
};

IntervalPrediction make_interval(double lower, double upper);

/// Strict ordering of a positive-class interval against a negative-class one.
enum class PairOrdering {
  kStrictlyAbove,  // a.lower > b.upper
  kStrictlyBelow,  // a.upper < b.lower
  kOverlap,        // neither; touching endpoints land here
};

enum class ThresholdSide {
  kAbove,     // lower > t
  kBelow,     // upper < t
  kContains,  // neither
};

/// Raw IEEE comparisons, no tolerance.
inline PairOrdering compare_pair(const IntervalPrediction& a,
                                 const IntervalPrediction& b) noexcept {
  if (a.lower() > b.upper()) return PairOrdering::kStrictlyAbove;
  if (a.upper() < b.lower()) return PairOrdering::kStrictlyBelow;
  return PairOrdering::kOverlap;
}

ThresholdSide compare_threshold(const IntervalPrediction& interval, double t);

const char* to_string(PairOrdering ordering) noexcept;
const char* to_string(ThresholdSide side) noexcept;

/// Interval predictions split by true class: positives are draws from the
/// positive-class interval distribution, negatives from the negative one.
struct ClassedIntervalDataset {
  std::vector<IntervalPrediction> positives;
  std::vector<IntervalPrediction> negatives;

  std::size_t n_pos() const noexcept { return positives.size(); }
  std::size_t n_neg() const noexcept { return negatives.size(); }
  bool empty() const noexcept { return positives.empty() && negatives.empty(); }

  /// Throws ContractError when either class is empty.
  void require_both_classes() const;

  /// Builds a dataset from parallel label/interval sequences (label 1 is
  /// positive, 0 negative; anything else throws).
  static ClassedIntervalDataset from_labeled(
      std::span<const int> labels, std::span<const IntervalPrediction> intervals);
};

}  // namespace intervalroc
