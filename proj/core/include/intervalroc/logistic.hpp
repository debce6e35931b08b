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
#include <optional>
#include <span>
#include <vector>

#include "intervalroc/tabular.hpp"

namespace intervalroc {

struct LogisticConfig {
  // L2 strength on the standardized weights. The objective is
  //   mean negative log-likelihood + lambda / 2 * ||w||^2
  // with the intercept unpenalized. Unset means 1 / n_train.
  std::optional<double> lambda;
  int max_iterations = 100;
  // Stop once the Euclidean norm of the objective gradient falls below this.
  double tolerance = 1e-8;
};

/// Logistic regression on z-scored features. Standardization statistics
/// come from the training rows only.
struct LogisticModel {
  std::vector<double> weights;        // one per input feature, standardized units
  double intercept = 0.0;
  std::vector<double> feature_mean;   // training means
  std::vector<double> feature_scale;  // training std (ddof 0); 1 for dropped
  std::vector<std::size_t> dropped_features;  // constant in training data
  double lambda = 0.0;
  int iterations = 0;
  double gradient_norm = 0.0;

  double predict_probability(std::span<const double> row) const;
  std::vector<double> predict(const TabularDataset& data) const;
};

/// Fits by damped Newton steps (iteratively reweighted least squares).
/// Constant features get zero weight and are listed in dropped_features.
/// Throws ContractError if train lacks a class and NumericError if the
/// gradient norm is still above tolerance after max_iterations.
LogisticModel fit_logistic(const TabularDataset& train,
                           const LogisticConfig& config = {});

}  // namespace intervalroc
