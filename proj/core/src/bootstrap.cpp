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

#include "intervalroc/bootstrap.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "intervalroc/errors.hpp"
#include "intervalroc/seeding.hpp"

namespace intervalroc {
namespace {

bool has_both_labels(const TabularDataset& data,
                     const std::vector<std::size_t>& indices) {
  bool seen[2] = {false, false};
  for (const std::size_t r : indices) seen[data.labels[r]] = true;
  return seen[0] && seen[1];
}

std::string format17(double value) {
  char buf[40];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value,
                                       std::chars_format::general, 17);
  return std::string(buf, end);
}

}  // namespace

std::vector<double> PredictionMatrix::column(std::size_t i) const {
  std::vector<double> out(replicates);
  for (std::size_t b = 0; b < replicates; ++b) out[b] = at(b, i);
  return out;
}

std::vector<std::size_t> bootstrap_resample(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> indices(n);
  for (auto& idx : indices) idx = pick(rng);
  return indices;
}

PredictionMatrix bootstrap_predict(const TabularDataset& train,
                                   const TabularDataset& test,
                                   const BootstrapOptions& options,
                                   const Resampler& resampler) {
  if (options.replicates < 1) {
    throw ContractError("bootstrap needs at least one replicate");
  }
  if (train.cols() != test.cols()) {
    throw ContractError("train and test feature counts differ");
  }
  if (train.count_label(0) == 0 || train.count_label(1) == 0) {
    throw ContractError("bootstrap training data must contain both classes");
  }

  PredictionMatrix matrix;
  matrix.replicates = options.replicates;
  matrix.instances = test.rows();
  matrix.values.assign(matrix.replicates * matrix.instances, 0.0);
  matrix.replicate_seeds.assign(matrix.replicates, 0);

  auto run_replicate = [&](std::size_t b) {
    for (int attempt = 0; attempt <= options.max_class_retries; ++attempt) {
      const auto seed = derive_seed(options.master_seed, SeedStream::kBootstrapReplicate,
                                    b, static_cast<std::uint64_t>(attempt));
      const auto indices = resampler(train.rows(), seed);
      if (!has_both_labels(train, indices)) continue;
      const auto model = fit_logistic(train.subset(indices), options.logistic);
      const auto predictions = model.predict(test);
      std::copy(predictions.begin(), predictions.end(),
                matrix.values.begin() + static_cast<std::ptrdiff_t>(b * matrix.instances));
      matrix.replicate_seeds[b] = seed;
      return;
    }
    throw ContractError("bootstrap replicate " + std::to_string(b) +
                        " drew a single-class resample " +
                        std::to_string(options.max_class_retries + 1) + " times");
  };

  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, options.replicates));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::size_t failed_at = options.replicates;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t b; (b = next.fetch_add(1)) < options.replicates;) {
      try {
        run_replicate(b);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        // Report the lowest failing replicate so errors are deterministic.
        if (b < failed_at) {
          failed_at = b;
          failure = std::current_exception();
        }
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return matrix;
}

double empirical_quantile(std::span<const double> sorted, double p, QuantileRule rule) {
  if (sorted.empty()) throw ContractError("quantile of an empty sample");
  if (!(p >= 0.0 && p <= 1.0)) throw ContractError("quantile probability outside [0, 1]");
  const std::size_t n = sorted.size();
  if (rule == QuantileRule::kInvertedCdf) {
    const double rank = std::ceil(p * static_cast<double>(n));
    const auto k = static_cast<std::size_t>(std::max(rank, 1.0)) - 1;
    return sorted[std::min(k, n - 1)];
  }
  const double h = static_cast<double>(n - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, n - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::vector<IntervalPrediction> percentile_bounds(const PredictionMatrix& matrix,
                                                  double level, QuantileRule rule) {
  if (!(level >= 0.0 && level < 1.0)) {
    throw ContractError("confidence level must lie in [0, 1)");
  }
  if (matrix.replicates == 0) throw ContractError("prediction matrix has no replicates");
  const double alpha = 1.0 - level;
  const double p_lo = alpha / 2.0;
  const double p_hi = 1.0 - alpha / 2.0;
  std::vector<IntervalPrediction> out;
  out.reserve(matrix.instances);
  for (std::size_t i = 0; i < matrix.instances; ++i) {
    auto col = matrix.column(i);
    std::sort(col.begin(), col.end());
    const double lo = empirical_quantile(col, p_lo, rule);
    const double hi = empirical_quantile(col, p_hi, rule);
    out.emplace_back(lo, std::max(lo, hi));
  }
  return out;
}

ClassedIntervalDataset percentile_intervals(const PredictionMatrix& matrix, double level,
                                            std::span<const int> labels,
                                            QuantileRule rule) {
  if (labels.size() != matrix.instances) {
    throw ContractError("label count " + std::to_string(labels.size()) +
                        " does not match matrix columns " +
                        std::to_string(matrix.instances));
  }
  const auto bounds = percentile_bounds(matrix, level, rule);
  return ClassedIntervalDataset::from_labeled(labels, bounds);
}

std::vector<double> replicate_means(const PredictionMatrix& matrix) {
  std::vector<double> means(matrix.instances, 0.0);
  for (std::size_t b = 0; b < matrix.replicates; ++b) {
    for (std::size_t i = 0; i < matrix.instances; ++i) means[i] += matrix.at(b, i);
  }
  for (auto& m : means) m /= static_cast<double>(matrix.replicates);
  return means;
}

double point_auc(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) {
    throw ContractError("score and label counts differ");
  }
  std::vector<double> neg;
  std::vector<double> pos;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (labels[i] == 1) {
      pos.push_back(scores[i]);
    } else if (labels[i] == 0) {
      neg.push_back(scores[i]);
    } else {
      throw ContractError("non-binary label at index " + std::to_string(i));
    }
  }
  if (pos.empty() || neg.empty()) {
    throw ContractError("point AUC needs both classes");
  }
  std::sort(neg.begin(), neg.end());
  // Twice the Mann-Whitney U: two per strictly lower negative, one per tie.
  std::uint64_t doubled = 0;
  for (const double s : pos) {
    const auto lo = std::lower_bound(neg.begin(), neg.end(), s);
    const auto hi = std::upper_bound(lo, neg.end(), s);
    doubled += 2 * static_cast<std::uint64_t>(lo - neg.begin()) +
               static_cast<std::uint64_t>(hi - lo);
  }
  return static_cast<double>(doubled) /
         (2.0 * static_cast<double>(pos.size()) * static_cast<double>(neg.size()));
}

std::string matrix_to_csv(const PredictionMatrix& matrix) {
  std::string out;
  out.reserve(matrix.values.size() * 22);
  for (std::size_t b = 0; b < matrix.replicates; ++b) {
    for (std::size_t i = 0; i < matrix.instances; ++i) {
      if (i > 0) out += ',';
      out += format17(matrix.at(b, i));
    }
    out += '\n';
  }
  return out;
}

PredictionMatrix parse_matrix_csv(std::istream& in, std::string_view source_name) {
  const std::string source(source_name);
  PredictionMatrix matrix;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t count = 0;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p <= end) {
      double value = 0.0;
      while (p < end && *p == ' ') ++p;
      const auto [ptr, ec] = std::from_chars(p, end, value);
      if (ec != std::errc{} || !std::isfinite(value) || value < 0.0 || value > 1.0) {
        throw ContractError(source + ":" + std::to_string(line_no) + ": field " +
                            std::to_string(count + 1) +
                            " is not a probability in [0, 1]");
      }
      matrix.values.push_back(value);
      ++count;
      p = ptr;
      while (p < end && *p == ' ') ++p;
      if (p == end) break;
      if (*p != ',') {
        throw ContractError(source + ":" + std::to_string(line_no) +
                            ": unexpected character after field " +
                            std::to_string(count));
      }
      ++p;
    }
    if (matrix.replicates == 0) {
      matrix.instances = count;
    } else if (count != matrix.instances) {
      throw ContractError(source + ":" + std::to_string(line_no) + ": expected " +
                          std::to_string(matrix.instances) + " columns, found " +
                          std::to_string(count));
    }
    ++matrix.replicates;
  }
  if (matrix.replicates == 0) throw ContractError(source + ": empty prediction matrix");
  matrix.replicate_seeds.assign(matrix.replicates, 0);
  return matrix;
}

PredictionMatrix load_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open '" + path.string() + "'");
  return parse_matrix_csv(in, path.string());
}

std::string labels_to_csv(std::span<const int> labels) {
  std::string out = "label\n";
  for (const int label : labels) {
    out += std::to_string(label);
    out += '\n';
  }
  return out;
}

std::vector<int> load_labels_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open '" + path.string() + "'");
  std::string header;
  std::getline(in, header);
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (header != "label") {
    throw ContractError(path.string() + ": expected a single 'label' header");
  }
  std::vector<int> labels;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line == "0" || line == "1") {
      labels.push_back(line[0] - '0');
    } else {
      throw ContractError(path.string() + ":" + std::to_string(line_no) +
                          ": non-binary label '" + line + "'");
    }
  }
  return labels;
}

}  // namespace intervalroc
