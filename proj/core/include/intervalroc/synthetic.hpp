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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "intervalroc/interval.hpp"

namespace intervalroc {

/// One-dimensional world with equal priors and X | Y=i ~ N(mu_i, 1), where
/// the posterior is known in closed form.
struct SyntheticConfig {
  double mu0 = 0.0;
  double mu1 = 1.0;
  std::size_t n_per_class = 20000;
  double alpha = 0.0;  // injected miscoverage, same for both classes
  std::uint64_t seed = 0;

  /// Throws ContractError unless n_per_class >= 2 and alpha in [0, 1).
  void validate() const;
};

struct SyntheticSample {
  double x = 0.0;
  int label = 0;
  double eta = 0.5;  // P(Y = 1 | X = x)
  std::optional<IntervalPrediction> interval;
  bool covered = false;  // eta inside interval
};

/// Exact posterior for equal priors and unit variances:
/// 1 / (1 + exp(-[(mu1 - mu0) x - (mu1^2 - mu0^2) / 2])).
double posterior_eta(double x, double mu0, double mu1) noexcept;

/// Population optimal AUC, Phi((mu1 - mu0) / sqrt(2)).
double analytic_auc_star(double mu0, double mu1) noexcept;

/// n_per_class negatives followed by n_per_class positives, each with its
/// exact posterior. Intervals are not attached.
std::vector<SyntheticSample> generate_world(const SyntheticConfig& config);

/// delta = 0.05 + 0.3 alpha + 0.1 std(eta), std over the pooled sample (ddof 0).
double interval_half_width(std::span<const SyntheticSample> samples, double alpha);

/// Attaches [eta - delta, eta + delta] to a random (1 - alpha) share of each
/// class, exactly round(alpha * n_class) samples per class are miscovered: their
/// centre moves by delta + eps (eps ~ U(0.01, 0.1), fair random sign) so eta
/// falls outside. Endpoints are clipped to [0, 1]; if clipping would cover eta
/// again the shift is mirrored.
std::vector<SyntheticSample> build_intervals(std::span<const SyntheticSample> samples,
                                             double alpha, std::uint64_t seed);

/// Pairwise P(eta1 > eta0) + P(eta1 = eta0) / 2 over the sample, O(n log n).
/// Throws ContractError if a class is empty.
double true_auc_star(std::span<const SyntheticSample> samples);

/// Throws ContractError if any sample lacks an interval.
ClassedIntervalDataset to_interval_dataset(std::span<const SyntheticSample> samples);

struct RealizedMiscoverage {
  double positive = 0.0;
  double negative = 0.0;
};
RealizedMiscoverage empirical_miscoverage(std::span<const SyntheticSample> samples);

/// lower_bound/upper_bound are the unclamped Theorem-style bracket
/// [auc_l - p_pair, auc_u + p_pair].
struct BoundValidationRow {
  double alpha = 0.0;
  double auc_l = 0.0;
  double auc_u = 0.0;
  double p_pair = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  double auc_star = 0.0;
  bool contained = false;

  double width() const noexcept { return upper_bound - lower_bound; }
};

/// One world drawn from the template (its alpha is ignored), then one set of
/// intervals per alpha, each seeded from (template.seed, alpha index). Rows run
/// concurrently; results do not depend on scheduling. Throws ContractError for
/// an empty list or an alpha outside [0, 1).
std::vector<BoundValidationRow> validate_bounds(const SyntheticConfig& config_template,
                                                std::span<const double> alphas);

/// Columns: alpha,auc_l,auc_u,p_pair,lower_bound,upper_bound,auc_star,contained
std::string validation_to_csv(std::span<const BoundValidationRow> rows);

}  // namespace intervalroc
