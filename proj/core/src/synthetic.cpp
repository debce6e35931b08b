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

#include "intervalroc/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <sstream>

#include "intervalroc/errors.hpp"
#include "intervalroc/pairwise.hpp"
#include "intervalroc/report_io.hpp"
#include "intervalroc/seeding.hpp"

namespace intervalroc {

void SyntheticConfig::validate() const {
  if (n_per_class < 2) throw ContractError("n_per_class must be at least 2");
  if (!(alpha >= 0.0 && alpha < 1.0)) throw ContractError("alpha must lie in [0, 1)");
  if (!std::isfinite(mu0) || !std::isfinite(mu1)) {
    throw ContractError("class means must be finite");
  }
}

double posterior_eta(double x, double mu0, double mu1) noexcept {
  const double z = (mu1 - mu0) * x - (mu1 * mu1 - mu0 * mu0) / 2.0;
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double analytic_auc_star(double mu0, double mu1) noexcept {
  // Phi(d / sqrt(2)) = erfc(-d / 2) / 2
  return 0.5 * std::erfc(-(mu1 - mu0) / 2.0);
}

std::vector<SyntheticSample> generate_world(const SyntheticConfig& config) {
  config.validate();
  std::vector<SyntheticSample> samples;
  samples.reserve(2 * config.n_per_class);
  for (int label = 0; label < 2; ++label) {
    std::mt19937_64 rng(derive_seed(config.seed, SeedStream::kSyntheticWorld,
                                    static_cast<std::uint64_t>(label)));
    std::normal_distribution<double> gauss(label == 1 ? config.mu1 : config.mu0, 1.0);
    for (std::size_t i = 0; i < config.n_per_class; ++i) {
      SyntheticSample s;
      s.x = gauss(rng);
      s.label = label;
      s.eta = posterior_eta(s.x, config.mu0, config.mu1);
      samples.push_back(s);
    }
  }
  return samples;
}

double interval_half_width(std::span<const SyntheticSample> samples, double alpha) {
  if (samples.empty()) throw ContractError("no samples");
  double mean = 0.0;
  for (const auto& s : samples) mean += s.eta;
  mean /= static_cast<double>(samples.size());
  double var = 0.0;
  for (const auto& s : samples) var += (s.eta - mean) * (s.eta - mean);
  const double sd = std::sqrt(var / static_cast<double>(samples.size()));
  return 0.05 + 0.3 * alpha + 0.1 * sd;
}

std::vector<SyntheticSample> build_intervals(std::span<const SyntheticSample> samples,
                                             double alpha, std::uint64_t seed) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ContractError("alpha must lie in [0, 1]");
  const double delta = interval_half_width(samples, alpha);
  std::vector<SyntheticSample> out(samples.begin(), samples.end());
  std::vector<bool> miscover(out.size(), false);

  std::mt19937_64 rng(derive_seed(seed, SeedStream::kSyntheticIntervals, 0));
  for (int label = 0; label < 2; ++label) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].label == label) members.push_back(i);
    }
    const auto k = static_cast<std::size_t>(
        std::llround(alpha * static_cast<double>(members.size())));
    std::shuffle(members.begin(), members.end(), rng);
    for (std::size_t j = 0; j < k; ++j) miscover[members[j]] = true;
  }

  std::uniform_real_distribution<double> eps_dist(0.01, 0.1);
  std::bernoulli_distribution coin(0.5);
  auto clipped = [delta](double centre) {
    return IntervalPrediction(std::clamp(centre - delta, 0.0, 1.0),
                              std::clamp(centre + delta, 0.0, 1.0));
  };
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto& s = out[i];
    if (!miscover[i]) {
      s.interval = clipped(s.eta);
    } else {
      const double shift = delta + eps_dist(rng);
      const double sign = coin(rng) ? 1.0 : -1.0;
      s.interval = clipped(s.eta + sign * shift);
      if (s.interval->contains(s.eta)) s.interval = clipped(s.eta - sign * shift);
    }
    s.covered = s.interval->contains(s.eta);
  }
  return out;
}

double true_auc_star(std::span<const SyntheticSample> samples) {
  std::vector<double> neg;
  std::vector<double> pos;
  for (const auto& s : samples) (s.label == 1 ? pos : neg).push_back(s.eta);
  if (pos.empty() || neg.empty()) throw ContractError("optimal AUC needs both classes");
  std::sort(neg.begin(), neg.end());
  std::uint64_t doubled = 0;
  for (const double e : pos) {
    const auto lo = std::lower_bound(neg.begin(), neg.end(), e);
    const auto hi = std::upper_bound(lo, neg.end(), e);
    doubled += 2 * static_cast<std::uint64_t>(lo - neg.begin()) +
               static_cast<std::uint64_t>(hi - lo);
  }
  return static_cast<double>(doubled) /
         (2.0 * static_cast<double>(pos.size()) * static_cast<double>(neg.size()));
}

ClassedIntervalDataset to_interval_dataset(std::span<const SyntheticSample> samples) {
  ClassedIntervalDataset data;
  for (const auto& s : samples) {
    if (!s.interval) throw ContractError("sample has no interval attached");
    (s.label == 1 ? data.positives : data.negatives).push_back(*s.interval);
  }
  return data;
}

RealizedMiscoverage empirical_miscoverage(std::span<const SyntheticSample> samples) {
  std::size_t missed[2] = {0, 0};
  std::size_t total[2] = {0, 0};
  for (const auto& s : samples) {
    ++total[s.label];
    missed[s.label] += !s.covered;
  }
  auto rate = [](std::size_t m, std::size_t t) {
    return t == 0 ? 0.0 : static_cast<double>(m) / static_cast<double>(t);
  };
  return {rate(missed[1], total[1]), rate(missed[0], total[0])};
}

std::vector<BoundValidationRow> validate_bounds(const SyntheticConfig& config_template,
                                                std::span<const double> alphas) {
  if (alphas.empty()) throw ContractError("alpha list is empty");
  for (const double a : alphas) {
    if (!(a >= 0.0 && a < 1.0)) {
      throw ContractError("alpha " + std::to_string(a) + " outside [0, 1)");
    }
  }
  SyntheticConfig world_config = config_template;
  world_config.alpha = 0.0;
  const auto world = generate_world(world_config);
  const double auc_star = true_auc_star(world);

  auto run_row = [&](std::size_t index) {
    const double alpha = alphas[index];
    const auto with_intervals = build_intervals(
        world, alpha,
        derive_seed(config_template.seed, SeedStream::kSyntheticIntervals, index));
    const auto regions = pairwise_counts(to_interval_dataset(with_intervals));
    BoundValidationRow row;
    row.alpha = alpha;
    row.auc_l = auc_l(regions);
    row.auc_u = auc_u(regions);
    const auto bounds = optimal_auc_bounds(row.auc_l, row.auc_u, alpha, alpha);
    row.p_pair = bounds.p_pair;
    row.lower_bound = bounds.raw_lower;
    row.upper_bound = bounds.raw_upper;
    row.auc_star = auc_star;
    row.contained = bounds.contains(auc_star);
    return row;
  };

  std::vector<std::future<BoundValidationRow>> pending;
  pending.reserve(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    pending.push_back(std::async(std::launch::async, run_row, i));
  }
  std::vector<BoundValidationRow> rows;
  rows.reserve(alphas.size());
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

std::string validation_to_csv(std::span<const BoundValidationRow> rows) {
  std::ostringstream out;
  out << "alpha,auc_l,auc_u,p_pair,lower_bound,upper_bound,auc_star,contained\n";
  for (const auto& r : rows) {
    out << format_decimal(r.alpha) << ',' << format_decimal(r.auc_l) << ','
        << format_decimal(r.auc_u) << ',' << format_decimal(r.p_pair) << ','
        << format_decimal(r.lower_bound) << ',' << format_decimal(r.upper_bound) << ','
        << format_decimal(r.auc_star) << ',' << (r.contained ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace intervalroc
