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

#include <cmath>
#include <string>

#include "intervalroc/errors.hpp"

namespace intervalroc {

IntervalPrediction::IntervalPrediction(double lower, double upper)
    : lower_(lower), upper_(upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper)) {
    throw ContractError("interval endpoints must be finite");
  }
  if (lower > upper) {
    throw ContractError("interval lower endpoint " + std::to_string(lower) +
                        " exceeds upper endpoint " + std::to_string(upper));
  }
}

IntervalPrediction make_interval(double lower, double upper) {
  return IntervalPrediction(lower, upper);
}

ThresholdSide compare_threshold(const IntervalPrediction& interval, double t) {
  if (interval.lower() > t) return ThresholdSide::kAbove;
  if (interval.upper() < t) return ThresholdSide::kBelow;
  return ThresholdSide::kContains;
}

const char* to_string(PairOrdering ordering) noexcept {
  switch (ordering) {
    case PairOrdering::kStrictlyAbove:
      return "strictly_above";
    case PairOrdering::kStrictlyBelow:
      return "strictly_below";
    case PairOrdering::kOverlap:
      return "overlap";
  }
  return "unknown";
}

const char* to_string(ThresholdSide side) noexcept {
  switch (side) {
    case ThresholdSide::kAbove:
      return "above";
    case ThresholdSide::kBelow:
      return "below";
    case ThresholdSide::kContains:
      return "contains";
  }
  return "unknown";
}

void ClassedIntervalDataset::require_both_classes() const {
  if (positives.empty() || negatives.empty()) {
    throw ContractError("dataset needs at least one positive and one negative "
                        "interval (have " + std::to_string(positives.size()) +
                        " positive, " + std::to_string(negatives.size()) +
                        " negative)");
  }
}

ClassedIntervalDataset ClassedIntervalDataset::from_labeled(
    std::span<const int> labels, std::span<const IntervalPrediction> intervals) {
  if (labels.size() != intervals.size()) {
    throw ContractError("label count " + std::to_string(labels.size()) +
                        " does not match interval count " +
                        std::to_string(intervals.size()));
  }
  ClassedIntervalDataset data;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == 1) {
      data.positives.push_back(intervals[i]);
    } else if (labels[i] == 0) {
      data.negatives.push_back(intervals[i]);
    } else {
      throw ContractError("label at index " + std::to_string(i) +
                          " is not binary: " + std::to_string(labels[i]));
    }
  }
  return data;
}

}  // namespace intervalroc
