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

// iroc: interval-valued ROC analysis from the command line.
//
// Exit codes: 0 success, 2 input-contract violation, 3 numeric failure
// (non-convergence), 1 anything else.

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "intervalroc/errors.hpp"
#include "iroc/commands.hpp"

namespace {

constexpr int kExitContract = 2;
constexpr int kExitNumeric = 3;

struct CommonFlags {
  std::string out_dir = "iroc-out";
  std::string emit = "json,csv,svg";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--out-dir", flags.out_dir, "Directory for all outputs")
      ->capture_default_str();
  cmd->add_option("--emit", flags.emit, "Comma list of json,csv,svg")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uncertainty-aware ROC analysis for interval-valued risk predictions"};
  app.require_subcommand(1);

  CommonFlags common;
  std::optional<double> alpha_pos, alpha_neg;
  std::string levels_text;
  std::string quantile_rule = "linear";

  iroc::EvalConfig eval;
  std::optional<double> eval_level_percent;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a label,lower,upper interval file");
  eval_cmd->add_option("--input", eval.input, "Interval CSV")->required();
  eval_cmd->add_option("--alpha-pos", alpha_pos, "Positive-class miscoverage");
  eval_cmd->add_option("--alpha-neg", alpha_neg, "Negative-class miscoverage");
  eval_cmd->add_option("--level", eval_level_percent,
                       "Nominal confidence level of the intervals, percent");
  add_common(eval_cmd, common);

  iroc::SweepConfig sweep;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Three-region sweep over percentile interval levels");
  sweep_cmd->add_option("--input", sweep.input, "Prediction matrix CSV")->required();
  sweep_cmd->add_option("--labels", sweep.labels, "Label CSV aligned with matrix columns")
      ->required();
  sweep_cmd->add_option("--levels", levels_text, "Comma list of percents")->required();
  sweep_cmd->add_option("--quantile-rule", quantile_rule, "linear or inverted-cdf")
      ->capture_default_str();
  sweep_cmd->add_option("--alpha-pos", alpha_pos, "Positive-class miscoverage");
  sweep_cmd->add_option("--alpha-neg", alpha_neg, "Negative-class miscoverage");
  add_common(sweep_cmd, common);

  iroc::BootstrapConfig boot;
  std::string zero_missing_text;
  std::optional<double> lambda;
  auto* boot_cmd = app.add_subcommand(
      "bootstrap", "Split, fit bootstrap logistic models, build intervals and sweep");
  boot_cmd->add_option("--input", boot.input, "Raw tabular CSV with header")->required();
  boot_cmd->add_option("--label-column", boot.label_column)->capture_default_str();
  boot_cmd->add_option("--zero-as-missing", zero_missing_text,
                       "Comma list of columns where 0 means missing (median-imputed)");
  boot_cmd->add_option("--train-frac", boot.train_fraction)->capture_default_str();
  boot_cmd->add_option("--seed", boot.seed)->capture_default_str();
  boot_cmd->add_option("--bootstrap-B", boot.replicates)->capture_default_str();
  boot_cmd->add_option("--levels", levels_text, "Comma list of percents (default 50,70,90,95)");
  boot_cmd->add_option("--lambda", lambda, "L2 strength (default 1/n_train)");
  boot_cmd->add_option("--max-iter", boot.max_iterations)->capture_default_str();
  boot_cmd->add_option("--tol", boot.tolerance)->capture_default_str();
  boot_cmd->add_option("--quantile-rule", quantile_rule, "linear or inverted-cdf")
      ->capture_default_str();
  boot_cmd->add_option("--threads", boot.threads, "0 = hardware concurrency")
      ->capture_default_str();
  add_common(boot_cmd, common);

  iroc::SynthConfig synth;
  std::string alphas_text;
  auto* synth_cmd = app.add_subcommand(
      "synth-bounds", "Validate optimal-AUC bounds in a known-posterior Gaussian world");
  synth_cmd->add_option("--alphas", alphas_text, "Comma list (default 0.01..0.10)");
  synth_cmd->add_option("--n", synth.n_per_class, "Samples per class")->capture_default_str();
  synth_cmd->add_option("--seed", synth.seed)->capture_default_str();
  synth_cmd->add_option("--mu0", synth.mu0)->capture_default_str();
  synth_cmd->add_option("--mu1", synth.mu1)->capture_default_str();
  add_common(synth_cmd, common);

  std::string manifest_path;
  auto* replay_cmd =
      app.add_subcommand("replay", "Re-run exactly the configuration stored in a manifest");
  replay_cmd->add_option("--manifest", manifest_path, "manifest.json of an earlier run")
      ->required();
  replay_cmd->add_option("--out-dir", common.out_dir)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitContract;
  }

  try {
    iroc::RunConfig config;
    const auto emit = iroc::parse_emit(common.emit);
    if (*eval_cmd) {
      eval.alpha_pos = alpha_pos;
      eval.alpha_neg = alpha_neg;
      if (eval_level_percent) eval.level = *eval_level_percent / 100.0;
      eval.emit = emit;
      config = eval;
    } else if (*sweep_cmd) {
      sweep.levels = iroc::parse_percent_levels(levels_text);
      sweep.quantile_rule = iroc::parse_quantile_rule(quantile_rule);
      sweep.alpha_pos = alpha_pos;
      sweep.alpha_neg = alpha_neg;
      sweep.emit = emit;
      config = sweep;
    } else if (*boot_cmd) {
      if (!levels_text.empty()) boot.levels = iroc::parse_percent_levels(levels_text);
      boot.quantile_rule = iroc::parse_quantile_rule(quantile_rule);
      boot.lambda = lambda;
      if (!zero_missing_text.empty()) {
        boot.zero_as_missing.clear();
        std::string item;
        std::stringstream ss(zero_missing_text);
        while (std::getline(ss, item, ',')) {
          if (!item.empty()) boot.zero_as_missing.push_back(item);
        }
      }
      boot.emit = emit;
      config = boot;
    } else if (*synth_cmd) {
      if (synth_cmd->count("--alphas") > 0) {
        synth.alphas = iroc::parse_number_list(alphas_text);
      }
      synth.emit = emit;
      config = synth;
    } else {
      config = iroc::load_manifest(manifest_path);
    }

    const auto bundle = iroc::run(config);
    bundle.commit(common.out_dir);
    std::cout << "iroc " << iroc::command_name(config) << ": wrote "
              << bundle.files().size() << " files to " << common.out_dir << "\n";
    if (bundle.contains("report.json")) std::cout << bundle.get("report.json");
    if (bundle.contains("baseline.json")) std::cout << bundle.get("baseline.json");
    if (bundle.contains("sweep.csv")) std::cout << bundle.get("sweep.csv");
    if (bundle.contains("bounds.csv")) std::cout << bundle.get("bounds.csv");
    return 0;
  } catch (const intervalroc::ContractError& e) {
    std::cerr << "iroc: input error: " << e.what() << "\n";
    return kExitContract;
  } catch (const intervalroc::NumericError& e) {
    std::cerr << "iroc: numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "iroc: " << e.what() << "\n";
    return 1;
  }
}
