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

#include "intervalroc/rates.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>

#include "intervalroc/errors.hpp"

namespace intervalroc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Fraction of a sorted sequence strictly greater than t.
double fraction_above(const std::vector<double>& sorted, double t) {
  const auto first_above = std::upper_bound(sorted.begin(), sorted.end(), t);
  return static_cast<double>(sorted.end() - first_above) /
         static_cast<double>(sorted.size());
}

std::vector<double> sorted_endpoints(const std::vector<IntervalPrediction>& v,
                                     bool lower) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& interval : v) {
    out.push_back(lower ? interval.lower() : interval.upper());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string_view to_string(CurvePairing pairing) noexcept {
  return pairing == CurvePairing::kStrict ? "strict" : "permissive";
}

std::vector<double> threshold_grid(const ClassedIntervalDataset& data) {
  if (data.empty()) {
    throw ContractError("threshold grid requested for an empty dataset");
  }
  std::vector<double> grid;
  grid.reserve(2 * (data.n_pos() + data.n_neg()) + 2);
  grid.push_back(-kInf);
  for (const auto* group : {&data.positives, &data.negatives}) {
    for (const auto& interval : *group) {
      grid.push_back(interval.lower());
      grid.push_back(interval.upper());
    }
  }
  grid.push_back(kInf);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

RateQuadruple rates_at(const ClassedIntervalDataset& data, double t) {
  data.require_both_classes();
  std::size_t pos_l = 0, pos_u = 0, neg_l = 0, neg_u = 0;
  for (const auto& interval : data.positives) {
    pos_l += interval.lower() > t;
    pos_u += interval.upper() > t;
  }
  for (const auto& interval : data.negatives) {
    neg_l += interval.lower() > t;
    neg_u += interval.upper() > t;
  }
  const auto n1 = static_cast<double>(data.n_pos());
  const auto n0 = static_cast<double>(data.n_neg());
  return {pos_l / n1, pos_u / n1, neg_l / n0, neg_u / n0};
}

RocCurve build_curve(const ClassedIntervalDataset& data, CurvePairing pairing) {
  data.require_both_classes();
  const bool strict = pairing == CurvePairing::kStrict;
  // Strict: y from positive lowers, x from negative uppers. Permissive swaps.
  const auto ys = sorted_endpoints(data.positives, /*lower=*/strict);
  const auto xs = sorted_endpoints(data.negatives, /*lower=*/!strict);

  const auto grid = threshold_grid(data);
  RocCurve curve{pairing, {}};
  curve.points.reserve(grid.size());
  for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
    curve.points.push_back({fraction_above(xs, *it), fraction_above(ys, *it), *it});
  }
  return curve;
}

double integrate_curve(const RocCurve& curve, IntegrationRule rule) {
  const auto& pts = curve.points;
  if (pts.size() < 2) {
    throw ContractError("curve integration needs at least two points");
  }
  const bool read_upper_threshold = curve.pairing == CurvePairing::kStrict;
  double area = 0.0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const double dx = pts[k + 1].x - pts[k].x;
    if (rule == IntegrationRule::kTrapezoid) {
      area += dx * (pts[k].y + pts[k + 1].y) / 2.0;
    } else {
      area += dx * (read_upper_threshold ? pts[k].y : pts[k + 1].y);
    }
  }
  return area;
}

}  // namespace intervalroc
