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

#include <string_view>
#include <vector>

#include "intervalroc/interval.hpp"

namespace intervalroc {

/// Empirical rate functions at one threshold t.
///   tpr_l = P(L1 > t), tpr_u = P(U1 > t), fpr_l = P(L0 > t), fpr_u = P(U0 > t)
/// Always tpr_l <= tpr_u and fpr_l <= fpr_u.
struct RateQuadruple {
  double tpr_l = 0.0;
  double tpr_u = 0.0;
  double fpr_l = 0.0;
  double fpr_u = 0.0;
};

enum class CurvePairing {
  kStrict,      // (FPR_U, TPR_L); area estimates AUC_L
  kPermissive,  // (FPR_L, TPR_U); area estimates AUC_U
};

std::string_view to_string(CurvePairing pairing) noexcept;

struct CurvePoint {
  double x = 0.0;
  double y = 0.0;
  double threshold = 0.0;
};

/// ROC-style curve over the endpoint grid.
///
/// Points are stored in order of decreasing threshold, which is increasing
/// (non-strictly) x: the first point is (0,0) at t = +inf and the last is
/// (1,1) at t = -inf. Zero-width steps are kept so the staircase can be
/// drawn as-is.
struct RocCurve {
  CurvePairing pairing = CurvePairing::kStrict;
  std::vector<CurvePoint> points;
};

enum class IntegrationRule {
  kTrapezoid,
  // Exact integral of the step functions. The strict curve reads each step
  // at its upper threshold and the permissive curve at its lower one, which
  // reproduces P(L1 > U0) and P(U1 >= L0) exactly, ties included.
  kStep,
};

/// Sorted unique endpoints of every interval in both classes, bracketed by
/// -inf and +inf. Throws ContractError if the dataset holds no intervals.
std::vector<double> threshold_grid(const ClassedIntervalDataset& data);

/// Throws ContractError if either class is empty.
RateQuadruple rates_at(const ClassedIntervalDataset& data, double t);

RocCurve build_curve(const ClassedIntervalDataset& data, CurvePairing pairing);

/// Area under the curve, summed left to right over the stored points.
/// Throws ContractError for fewer than two points.
double integrate_curve(const RocCurve& curve,
                       IntegrationRule rule = IntegrationRule::kTrapezoid);

}  // namespace intervalroc
