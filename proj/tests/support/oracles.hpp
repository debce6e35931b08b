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

// Independent reference computations for tests. Nothing here calls into the
// library's counting, sorting or integration code.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "intervalroc/interval.hpp"

namespace intervalroc::testing {

struct BruteCounts {
  std::uint64_t above = 0;
  std::uint64_t below = 0;
  std::uint64_t overlap = 0;
};

inline BruteCounts brute_force_counts(const ClassedIntervalDataset& data) {
  BruteCounts c;
  for (const auto& p : data.positives) {
    for (const auto& n : data.negatives) {
      if (p.lower() > n.upper()) {
        ++c.above;
      } else if (p.upper() < n.lower()) {
        ++c.below;
      } else {
        ++c.overlap;
      }
    }
  }
  return c;
}

// P(s1 > s0) + P(s1 = s0) / 2 by double loop.
inline double brute_force_auc(const std::vector<double>& pos,
                              const std::vector<double>& neg) {
  double credit = 0.0;
  for (const double a : pos) {
    for (const double b : neg) credit += a > b ? 1.0 : (a == b ? 0.5 : 0.0);
  }
  return credit / (static_cast<double>(pos.size()) * static_cast<double>(neg.size()));
}

// Random interval dataset. With tie_grid > 0 every endpoint is snapped to a
// grid of that many cells in [0, 1] so equal endpoints are frequent.
inline ClassedIntervalDataset random_dataset(std::mt19937_64& rng, std::size_t n_pos,
                                             std::size_t n_neg, int tie_grid = 0) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> width(0.0, 0.4);
  auto snap = [tie_grid](double v) {
    return tie_grid > 0 ? std::round(v * tie_grid) / tie_grid : v;
  };
  auto draw = [&](double shift) {
    const double centre = std::clamp(unit(rng) * 0.8 + shift, 0.0, 1.0);
    const double half = width(rng) / 2.0;
    double lo = snap(std::clamp(centre - half, 0.0, 1.0));
    double hi = snap(std::clamp(centre + half, 0.0, 1.0));
    return IntervalPrediction(lo, std::max(lo, hi));
  };
  ClassedIntervalDataset data;
  for (std::size_t i = 0; i < n_pos; ++i) data.positives.push_back(draw(0.2));
  for (std::size_t i = 0; i < n_neg; ++i) data.negatives.push_back(draw(0.0));
  return data;
}

inline double normal_pdf(double x, double mu) {
  constexpr double kInvSqrt2Pi = 0.39894228040143267794;
  return kInvSqrt2Pi * std::exp(-0.5 * (x - mu) * (x - mu));
}

}  // namespace intervalroc::testing
