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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "intervalroc/pairwise.hpp"
#include "intervalroc/rates.hpp"

namespace intervalroc {

/// Shortest decimal that round-trips the double ("%.17g" precision at most).
std::string format_decimal(double value);

/// Stable JSON document for one report. Keys, in order: auc_l, auc_u,
/// p_correct, p_overlap, p_incorrect, uauc, abstention_rate, bounds,
/// confidence_level, n_pos, n_neg. bounds holds lower, upper, p_pair,
/// raw_lower, raw_upper. Unknown values (uauc with no decisive pairs,
/// absent bounds or level) are null.
std::string report_to_json(const EvaluationReport& report, int indent = 2);

/// One row per level:
/// level,auc_l,auc_u,p_correct,p_overlap,p_incorrect,uauc,abstention_rate,n_pos,n_neg
/// An undefined uauc is written as an empty field.
std::string sweep_to_csv(const SweepTable& table);

/// Rows of threshold,x,y,pairing for each curve in its stored order.
std::string curves_to_csv(const RocCurve& strict, const RocCurve& permissive);

/// Interval file: header naming at least label, lower, upper (any order,
/// extra columns ignored), one interval per row. Throws ContractError naming
/// the line for unparseable cells, non-binary labels or lower > upper, and
/// when either class ends up empty.
ClassedIntervalDataset parse_interval_csv(std::istream& in,
                                          std::string_view source_name = "<stream>");
ClassedIntervalDataset load_interval_csv(const std::filesystem::path& path);

/// Writes negatives then positives in the format parse_interval_csv reads.
std::string intervals_to_csv(const ClassedIntervalDataset& data);

}  // namespace intervalroc
