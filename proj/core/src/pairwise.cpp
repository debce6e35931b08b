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

#include "intervalroc/pairwise.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "intervalroc/errors.hpp"

namespace intervalroc {

ThreeRegion pairwise_counts(const ClassedIntervalDataset& data) {
  data.require_both_classes();
  std::vector<double> neg_upper, neg_lower;
  neg_upper.reserve(data.n_neg());
  neg_lower.reserve(data.n_neg());
  for (const auto& interval : data.negatives) {
    neg_upper.push_back(interval.upper());
    neg_lower.push_back(interval.lower());
  }
  std::sort(neg_upper.begin(), neg_upper.end());
  std::sort(neg_lower.begin(), neg_lower.end());

  ThreeRegion regions;
  regions.pair_count =
      static_cast<std::uint64_t>(data.n_pos()) * data.n_neg();
  for (const auto& interval : data.positives) {
    // negatives with U0 < L1
    regions.correct += static_cast<std::uint64_t>(
        std::lower_bound(neg_upper.begin(), neg_upper.end(), interval.lower()) -
        neg_upper.begin());
    // negatives with L0 > U1
    regions.incorrect += static_cast<std::uint64_t>(
        neg_lower.end() -
        std::upper_bound(neg_lower.begin(), neg_lower.end(), interval.upper()));
  }
  return regions;
}

double auc_l(const ThreeRegion& regions) noexcept { return regions.p_correct(); }

double auc_u(const ThreeRegion& regions) noexcept {
  if (regions.pair_count == 0) return 1.0;
  return static_cast<double>(regions.pair_count - regions.incorrect) /
         static_cast<double>(regions.pair_count);
}

double auc_l(const ClassedIntervalDataset& data) {
  return auc_l(pairwise_counts(data));
}

double auc_u(const ClassedIntervalDataset& data) {
  return auc_u(pairwise_counts(data));
}

std::optional<double> uauc(const ThreeRegion& regions) noexcept {
  const std::uint64_t decisive = regions.correct + regions.incorrect;
  if (decisive == 0) return std::nullopt;
  return static_cast<double>(regions.correct) / static_cast<double>(decisive);
}

double abstention_rate(const ThreeRegion& regions) noexcept {
  return regions.p_overlap();
}

double pair_miscoverage(double alpha_pos, double alpha_neg) noexcept {
  return alpha_pos + alpha_neg - alpha_pos * alpha_neg;
}

namespace {

void require_unit(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ContractError(std::string(name) + " must lie in [0, 1], got " +
                        std::to_string(value));
  }
}

}  // namespace

BoundInterval optimal_auc_bounds(double auc_l, double auc_u, double alpha_pos,
                                 double alpha_neg) {
  require_unit(alpha_pos, "alpha_pos");
  require_unit(alpha_neg, "alpha_neg");
  require_unit(auc_l, "auc_l");
  require_unit(auc_u, "auc_u");
  BoundInterval b;
  b.alpha_pos = alpha_pos;
  b.alpha_neg = alpha_neg;
  b.p_pair = pair_miscoverage(alpha_pos, alpha_neg);
  b.raw_lower = auc_l - b.p_pair;
  b.raw_upper = auc_u + b.p_pair;
  b.lower_bound = std::clamp(b.raw_lower, 0.0, 1.0);
  b.upper_bound = std::clamp(b.raw_upper, 0.0, 1.0);
  return b;
}

EvaluationReport evaluate(const ClassedIntervalDataset& data,
                          std::optional<Miscoverage> miscoverage,
                          std::optional<double> confidence_level) {
  EvaluationReport report;
  report.three_region = pairwise_counts(data);
  report.auc_l = auc_l(report.three_region);
  report.auc_u = auc_u(report.three_region);
  report.uauc = uauc(report.three_region);
  report.abstention_rate = abstention_rate(report.three_region);
  if (miscoverage) {
    report.bounds = optimal_auc_bounds(report.auc_l, report.auc_u,
                                       miscoverage->alpha_pos,
                                       miscoverage->alpha_neg);
  }
  report.confidence_level = confidence_level;
  report.n_pos = data.n_pos();
  report.n_neg = data.n_neg();
  return report;
}

SweepTable confidence_sweep(const IntervalProvider& provider,
                            std::span<const double> levels,
                            std::optional<Miscoverage> miscoverage) {
  if (levels.empty()) {
    throw ContractError("confidence sweep needs at least one level");
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!(levels[i] >= 0.0 && levels[i] < 1.0)) {
      throw ContractError("confidence level " + std::to_string(levels[i]) +
                          " outside [0, 1)");
    }
    if (i > 0 && !(levels[i] > levels[i - 1])) {
      throw ContractError("confidence levels must be strictly increasing");
    }
  }

  SweepTable table;
  table.rows.reserve(levels.size());
  for (const double level : levels) {
    const std::string where = "confidence level " + std::to_string(level) + ": ";
    try {
      table.rows.push_back({level, evaluate(provider(level), miscoverage, level)});
    } catch (const ContractError& e) {
      throw ContractError(where + e.what());
    } catch (const NumericError& e) {
      throw NumericError(where + e.what());
    } catch (const std::exception& e) {
      throw std::runtime_error(where + e.what());
    }
  }
  return table;
}

}  // namespace intervalroc
