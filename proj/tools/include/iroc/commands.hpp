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
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "intervalroc/bootstrap.hpp"
#include "intervalroc/pairwise.hpp"
#include "iroc/output_bundle.hpp"

namespace iroc {

struct EmitFlags {
  bool json = true;
  bool csv = true;
  bool svg = true;
};

/// "json,csv,svg" (any subset). Throws ContractError on unknown names.
EmitFlags parse_emit(std::string_view text);
/// "50,70,90,95" -> {0.5, 0.7, 0.9, 0.95}. Throws ContractError on bad input.
std::vector<double> parse_percent_levels(std::string_view text);
/// "0.01,0.02" -> {0.01, 0.02}.
std::vector<double> parse_number_list(std::string_view text);
intervalroc::QuantileRule parse_quantile_rule(std::string_view text);
std::string_view to_string(intervalroc::QuantileRule rule);

struct EvalConfig {
  std::filesystem::path input;  // label,lower,upper CSV
  std::optional<double> alpha_pos;
  std::optional<double> alpha_neg;
  std::optional<double> level;  // nominal level of the intervals, metadata only
  EmitFlags emit;
};

struct SweepConfig {
  std::filesystem::path input;   // prediction matrix CSV
  std::filesystem::path labels;  // label CSV aligned with matrix columns
  std::vector<double> levels;    // fractions; 0 is prepended when absent
  intervalroc::QuantileRule quantile_rule = intervalroc::QuantileRule::kLinear;
  std::optional<double> alpha_pos;
  std::optional<double> alpha_neg;
  EmitFlags emit;
};

struct BootstrapConfig {
  std::filesystem::path input;  // raw tabular CSV
  std::string label_column = "Outcome";
  std::vector<std::string> zero_as_missing;
  double train_fraction = 0.3;
  std::uint64_t seed = 42;
  std::size_t replicates = 300;
  std::vector<double> levels = {0.5, 0.7, 0.9, 0.95};
  std::optional<double> lambda;
  int max_iterations = 100;
  double tolerance = 1e-8;
  intervalroc::QuantileRule quantile_rule = intervalroc::QuantileRule::kLinear;
  unsigned threads = 0;
  EmitFlags emit;
};

struct SynthConfig {
  std::vector<double> alphas = {0.01, 0.02, 0.03, 0.04, 0.05,
                                0.06, 0.07, 0.08, 0.09, 0.10};
  std::size_t n_per_class = 20000;
  std::uint64_t seed = 0;
  double mu0 = 0.0;
  double mu1 = 1.0;
  EmitFlags emit;
};

using RunConfig = std::variant<EvalConfig, SweepConfig, BootstrapConfig, SynthConfig>;

std::string_view command_name(const RunConfig& config);

/// Full resolved configuration as JSON; parse_manifest inverts it.
std::string manifest_json(const RunConfig& config);
RunConfig parse_manifest(std::string_view json_text);
RunConfig load_manifest(const std::filesystem::path& path);

/// Integration-vs-counting cross-check for one interval dataset.
struct CurveDiagnostics {
  double auc_l_counting = 0.0;
  double auc_u_counting = 0.0;
  double auc_l_trapezoid = 0.0;
  double auc_u_trapezoid = 0.0;
  double auc_l_step = 0.0;
  double auc_u_step = 0.0;
};
CurveDiagnostics curve_diagnostics(const intervalroc::ClassedIntervalDataset& data);

/// Computes every output file of the run (manifest.json included) without
/// touching the output directory.
OutputBundle run(const RunConfig& config);

}  // namespace iroc
