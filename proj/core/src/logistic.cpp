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

#include "intervalroc/logistic.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "intervalroc/errors.hpp"

namespace intervalroc {
namespace {

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow.
double softplus(double z) {
  return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

struct Problem {
  Eigen::MatrixXd design;  // [1 | standardized active features]
  Eigen::VectorXd target;
  double lambda;

  double objective(const Eigen::VectorXd& beta) const {
    const Eigen::VectorXd z = design * beta;
    double nll = 0.0;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      nll += softplus(z[i]) - target[i] * z[i];
    }
    const double ridge = beta.tail(beta.size() - 1).squaredNorm();
    return nll / static_cast<double>(z.size()) + 0.5 * lambda * ridge;
  }
};

}  // namespace

double LogisticModel::predict_probability(std::span<const double> row) const {
  double z = intercept;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    z += weights[j] * (row[j] - feature_mean[j]) / feature_scale[j];
  }
  return sigmoid(z);
}

std::vector<double> LogisticModel::predict(const TabularDataset& data) const {
  std::vector<double> out;
  out.reserve(data.rows());
  for (std::size_t r = 0; r < data.rows(); ++r) {
    out.push_back(predict_probability(data.row(r)));
  }
  return out;
}

LogisticModel fit_logistic(const TabularDataset& train, const LogisticConfig& config) {
  const std::size_t n = train.rows();
  const std::size_t d = train.cols();
  if (train.count_label(0) == 0 || train.count_label(1) == 0) {
    throw ContractError("logistic fit needs both classes in the training data");
  }

  LogisticModel model;
  model.lambda = config.lambda.value_or(1.0 / static_cast<double>(n));
  if (model.lambda < 0.0) {
    throw ContractError("regularization strength must be non-negative");
  }
  model.feature_mean.assign(d, 0.0);
  model.feature_scale.assign(d, 1.0);
  model.weights.assign(d, 0.0);

  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < d; ++j) {
    double mean = 0.0;
    for (std::size_t r = 0; r < n; ++r) mean += train.at(r, j);
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double dev = train.at(r, j) - mean;
      var += dev * dev;
    }
    const double sd = std::sqrt(var / static_cast<double>(n));
    model.feature_mean[j] = mean;
    if (sd > 0.0) {
      model.feature_scale[j] = sd;
      active.push_back(j);
    } else {
      model.dropped_features.push_back(j);
    }
  }

  const auto p = static_cast<Eigen::Index>(active.size() + 1);
  Problem problem{Eigen::MatrixXd(static_cast<Eigen::Index>(n), p),
                  Eigen::VectorXd(static_cast<Eigen::Index>(n)), model.lambda};
  for (std::size_t r = 0; r < n; ++r) {
    const auto i = static_cast<Eigen::Index>(r);
    problem.design(i, 0) = 1.0;
    for (std::size_t k = 0; k < active.size(); ++k) {
      const std::size_t j = active[k];
      problem.design(i, static_cast<Eigen::Index>(k + 1)) =
          (train.at(r, j) - model.feature_mean[j]) / model.feature_scale[j];
    }
    problem.target[i] = train.labels[r];
  }

  const double inv_n = 1.0 / static_cast<double>(n);
  Eigen::VectorXd penalty = Eigen::VectorXd::Constant(p, model.lambda);
  penalty[0] = 0.0;

  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  double current = problem.objective(beta);
  double grad_norm = 0.0;
  int iter = 0;
  for (;; ++iter) {
    const Eigen::VectorXd z = problem.design * beta;
    Eigen::VectorXd prob(z.size()), w(z.size());
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      prob[i] = sigmoid(z[i]);
      w[i] = prob[i] * (1.0 - prob[i]);
    }
    const Eigen::VectorXd grad =
        inv_n * problem.design.transpose() * (prob - problem.target) +
        penalty.cwiseProduct(beta);
    grad_norm = grad.norm();
    if (grad_norm <= config.tolerance || iter >= config.max_iterations) break;

    Eigen::MatrixXd hessian =
        inv_n * problem.design.transpose() * w.asDiagonal() * problem.design;
    hessian.diagonal() += penalty;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(hessian);
    Eigen::VectorXd step = ldlt.solve(grad);
    if (ldlt.info() != Eigen::Success || !step.allFinite()) step = grad;

    // Armijo backtracking keeps the iteration monotone when the quadratic
    // model is poor (near-separable data with small lambda).
    double t = 1.0;
    const double slope = grad.dot(step);
    Eigen::VectorXd candidate = beta - step;
    double next = problem.objective(candidate);
    for (int halvings = 0; halvings < 60 && !(next <= current - 1e-4 * t * slope);
         ++halvings) {
      t *= 0.5;
      candidate = beta - t * step;
      next = problem.objective(candidate);
    }
    if (!(next <= current)) break;  // no descent possible at machine precision
    beta = candidate;
    current = next;
  }

  model.iterations = iter;
  model.gradient_norm = grad_norm;
  if (!(grad_norm <= config.tolerance)) {
    throw NumericError("logistic regression did not converge after " +
                       std::to_string(iter) + " iterations (gradient norm " +
                       std::to_string(grad_norm) + ", tolerance " +
                       std::to_string(config.tolerance) + ")");
  }
  model.intercept = beta[0];
  for (std::size_t k = 0; k < active.size(); ++k) {
    model.weights[active[k]] = beta[static_cast<Eigen::Index>(k + 1)];
  }
  return model;
}

}  // namespace intervalroc
