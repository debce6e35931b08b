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

#include <span>
#include <string>

#include "intervalroc/pairwise.hpp"
#include "intervalroc/rates.hpp"
#include "intervalroc/synthetic.hpp"

namespace iroc {

/// Unit-square plot of both curves. The area under the strict curve is
/// shaded blue (confident correct), the area above the permissive curve red
/// (confident incorrect); the white band between them is the overlap mass.
std::string roc_square_svg(const intervalroc::RocCurve& strict,
                           const intervalroc::RocCurve& permissive,
                           const intervalroc::EvaluationReport& report);

/// Stacked areas of P(correct), P(overlap), P(incorrect) over confidence
/// levels.
std::string three_region_svg(const intervalroc::SweepTable& table);

/// Bound band [lower, upper] against alpha with the optimal AUC overlaid.
std::string bound_band_svg(std::span<const intervalroc::BoundValidationRow> rows);

}  // namespace iroc
