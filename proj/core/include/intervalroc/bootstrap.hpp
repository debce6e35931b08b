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
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "intervalroc/interval.hpp"
#include "intervalroc/logistic.hpp"
#include "intervalroc/tabular.hpp"

namespace intervalroc {

/// Bootstrap predictions: one row per replicate model, one column per test
/// instance. Every entry lies in [0, 1].
struct PredictionMatrix {
  std::size_t replicates = 0;
  std::size_t instances = 0;
  std::vector<double> values;  // row-major replicates x instances
  std::vector<std::uint64_t> replicate_seeds;  // seed whose resample was fitted

  double at(std::size_t b, std::size_t i) const { return values[b * instances + i]; }
  std::span<const double> row(std::size_t b) const {
    return {values.data() + b * instances, instances};
  }
  std::vector<double> column(std::size_t i) const;
};

/// Row indices of one resample of size n.
using Resampler =
    std::function<std::vector<std::size_t>(std::size_t n, std::uint64_t seed)>;

/// n draws with replacement, uniform over [0, n).
std::vector<std::size_t> bootstrap_resample(std::size_t n, std::uint64_t seed);

struct BootstrapOptions {
  std::size_t replicates = 300;
  std::uint64_t master_seed = 42;
  LogisticConfig logistic;
  // 0 picks std::thread::hardware_concurrency(). Output does not depend on it.
  unsigned threads = 0;
  // Redraws allowed when a resample misses a class.
  int max_class_retries = 100;
};

/// Fits one logistic model per replicate on a resample of train and predicts
/// test. Replicate b draws its resample from
/// derive_seed(master_seed, kBootstrapReplicate, b, attempt), where attempt
/// counts redraws of single-class resamples. Throws ContractError when the
/// retry cap is exhausted and propagates NumericError from the fits.
PredictionMatrix bootstrap_predict(const TabularDataset& train,
                                   const TabularDataset& test,
                                   const BootstrapOptions& options,
                                   const Resampler& resampler = bootstrap_resample);

enum class QuantileRule {
  kLinear,       // interpolate order statistics at h = (B - 1) p
  kInvertedCdf,  // smallest order statistic with empirical cdf >= p
};

/// p-quantile of an ascending sequence. Throws ContractError when empty or p
/// outside [0, 1].
double empirical_quantile(std::span<const double> sorted, double p,
                          QuantileRule rule = QuantileRule::kLinear);

/// Per-instance interval [Q(alpha/2), Q(1 - alpha/2)] with alpha = 1 - level.
/// Level 0 collapses every interval onto its median.
std::vector<IntervalPrediction> percentile_bounds(
    const PredictionMatrix& matrix, double level,
    QuantileRule rule = QuantileRule::kLinear);

/// percentile_bounds split by the test labels. Throws ContractError when the
/// label count differs from the number of instances.
ClassedIntervalDataset percentile_intervals(
    const PredictionMatrix& matrix, double level, std::span<const int> labels,
    QuantileRule rule = QuantileRule::kLinear);

/// Column means (per-instance mean prediction over replicates).
std::vector<double> replicate_means(const PredictionMatrix& matrix);

/// Classical empirical AUC, P(s1 > s0) + P(s1 = s0) / 2. Throws ContractError
/// for mismatched lengths, non-binary labels or an empty class.
double point_auc(std::span<const double> scores, std::span<const int> labels);

/// B rows of m comma-separated values, 17 significant digits, no header.
std::string matrix_to_csv(const PredictionMatrix& matrix);
PredictionMatrix parse_matrix_csv(std::istream& in,
                                  std::string_view source_name = "<stream>");
PredictionMatrix load_matrix_csv(const std::filesystem::path& path);

/// Single column with header "label", one 0/1 per line.
std::string labels_to_csv(std::span<const int> labels);
std::vector<int> load_labels_csv(const std::filesystem::path& path);

}  // namespace intervalroc
