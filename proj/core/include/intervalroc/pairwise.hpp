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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "intervalroc/interval.hpp"

namespace intervalroc {

/// Counts of positive/negative pairs by strict interval ordering.
///
/// correct + incorrect + overlap == pair_count == n_pos * n_neg; the
/// probabilities are those counts divided by pair_count.
struct ThreeRegion {
  std::uint64_t correct = 0;    // L1 > U0
  std::uint64_t incorrect = 0;  // U1 < L0
  std::uint64_t pair_count = 0;

  std::uint64_t overlap() const noexcept {
    return pair_count - correct - incorrect;
  }
  double p_correct() const noexcept { return ratio(correct); }
  double p_incorrect() const noexcept { return ratio(incorrect); }
  double p_overlap() const noexcept { return ratio(overlap()); }

  friend bool operator==(const ThreeRegion&, const ThreeRegion&) = default;

 private:
  double ratio(std::uint64_t count) const noexcept {
    return pair_count == 0 ? 0.0
                           : static_cast<double>(count) /
                                 static_cast<double>(pair_count);
  }
};

/// Counts every positive/negative pair in O((n1 + n0) log(n1 + n0)) by
/// ranking positive endpoints against sorted negative endpoints.
/// Throws ContractError if a class is empty.
ThreeRegion pairwise_counts(const ClassedIntervalDataset& data);

/// P(I1 > I0).
double auc_l(const ThreeRegion& regions) noexcept;
/// 1 - P(I1 < I0).
double auc_u(const ThreeRegion& regions) noexcept;
double auc_l(const ClassedIntervalDataset& data);
double auc_u(const ClassedIntervalDataset& data);

/// Fraction of correctly ordered pairs among decisive (non-overlapping)
/// ones. Empty when every pair overlaps.
std::optional<double> uauc(const ThreeRegion& regions) noexcept;

/// Fraction of pairs whose intervals overlap, i.e. where no ranking is made.
double abstention_rate(const ThreeRegion& regions) noexcept;

/// Class-conditional miscoverage rates of the intervals with respect to the
/// true posterior. Supplied by the caller; never estimated from labels.
struct Miscoverage {
  double alpha_pos = 0.0;
  double alpha_neg = 0.0;
};

/// Probability that at least one interval of an independent pair misses
/// its posterior: alpha_pos + alpha_neg - alpha_pos * alpha_neg.
double pair_miscoverage(double alpha_pos, double alpha_neg) noexcept;

/// Bracket on the optimal (Bayes) AUC: [AUC_L - p_pair, AUC_U + p_pair].
/// lower_bound/upper_bound are clamped to [0, 1]; raw_* keep the
/// unclamped values.
struct BoundInterval {
  double lower_bound = 0.0;
  double upper_bound = 1.0;
  double raw_lower = 0.0;
  double raw_upper = 1.0;
  double p_pair = 0.0;
  double alpha_pos = 0.0;
  double alpha_neg = 0.0;

  double raw_width() const noexcept { return raw_upper - raw_lower; }
  bool contains(double auc) const noexcept {
    return raw_lower <= auc && auc <= raw_upper;
  }
};

/// Throws ContractError if an alpha lies outside [0, 1] or an AUC outside
/// [0, 1].
BoundInterval optimal_auc_bounds(double auc_l, double auc_u, double alpha_pos,
                                 double alpha_neg);

struct EvaluationReport {
  double auc_l = 0.0;
  double auc_u = 0.0;
  ThreeRegion three_region;
  std::optional<double> uauc;
  double abstention_rate = 0.0;
  std::optional<BoundInterval> bounds;
  // Nominal level of the interval construction, when known.
  std::optional<double> confidence_level;
  std::uint64_t n_pos = 0;
  std::uint64_t n_neg = 0;
};

EvaluationReport evaluate(const ClassedIntervalDataset& data,
                          std::optional<Miscoverage> miscoverage = std::nullopt,
                          std::optional<double> confidence_level = std::nullopt);

/// Produces the interval dataset for one confidence level. All levels must
/// come from the same underlying predictions.
using IntervalProvider = std::function<ClassedIntervalDataset(double level)>;

struct SweepRow {
  double level = 0.0;
  EvaluationReport report;
};

struct SweepTable {
  std::vector<SweepRow> rows;
};

/// Evaluates every level in order. Levels must be non-empty, strictly
/// increasing and inside [0, 1). A provider failure is rethrown with the
/// offending level prefixed to the message, keeping the error category.
SweepTable confidence_sweep(const IntervalProvider& provider,
                            std::span<const double> levels,
                            std::optional<Miscoverage> miscoverage = std::nullopt);

}  // namespace intervalroc
