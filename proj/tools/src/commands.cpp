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

#include "iroc/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "intervalroc/errors.hpp"
#include "intervalroc/rates.hpp"
#include "intervalroc/report_io.hpp"
#include "intervalroc/seeding.hpp"
#include "intervalroc/synthetic.hpp"
#include "intervalroc/tabular.hpp"
#include "iroc/svg_plots.hpp"
#include "json.hpp"

namespace iroc {

using intervalroc::ContractError;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "0.1.0";

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    std::string item(text.substr(start, comma - start));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) items.push_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

double parse_number(const std::string& item) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
  if (ec != std::errc{} || ptr != item.data() + item.size() || !std::isfinite(value)) {
    throw ContractError("not a number: '" + item + "'");
  }
  return value;
}

std::string percent_label(double level) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", std::round(level * 1e6) / 1e4);
  return buf;
}

ordered_json emit_json(const EmitFlags& e) {
  return {{"json", e.json}, {"csv", e.csv}, {"svg", e.svg}};
}

EmitFlags emit_from_json(const ordered_json& j) {
  return {j.at("json").get<bool>(), j.at("csv").get<bool>(), j.at("svg").get<bool>()};
}

ordered_json optional_json(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::optional<double> optional_from_json(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

std::string absolute_string(const fs::path& p) {
  return p.empty() ? std::string() : fs::absolute(p).lexically_normal().string();
}

std::optional<intervalroc::Miscoverage> miscoverage_of(const std::optional<double>& pos,
                                                       const std::optional<double>& neg) {
  if (pos.has_value() != neg.has_value()) {
    throw ContractError("--alpha-pos and --alpha-neg must be given together");
  }
  if (!pos) return std::nullopt;
  return intervalroc::Miscoverage{*pos, *neg};
}

std::vector<double> with_level_zero(std::vector<double> levels) {
  if (levels.empty()) throw ContractError("level list is empty");
  if (levels.front() != 0.0) levels.insert(levels.begin(), 0.0);
  return levels;
}

ordered_json diagnostics_json(const CurveDiagnostics& d) {
  return {{"auc_l_counting", d.auc_l_counting},
          {"auc_u_counting", d.auc_u_counting},
          {"auc_l_trapezoid", d.auc_l_trapezoid},
          {"auc_u_trapezoid", d.auc_u_trapezoid},
          {"auc_l_step", d.auc_l_step},
          {"auc_u_step", d.auc_u_step},
          {"delta_auc_l_trapezoid", d.auc_l_trapezoid - d.auc_l_counting},
          {"delta_auc_u_trapezoid", d.auc_u_trapezoid - d.auc_u_counting},
          {"delta_auc_l_step", d.auc_l_step - d.auc_l_counting},
          {"delta_auc_u_step", d.auc_u_step - d.auc_u_counting}};
}

// report.json, diagnostics.json, curves.csv and roc.svg under prefix.
void add_evaluation(OutputBundle& bundle, const std::string& prefix,
                    const intervalroc::ClassedIntervalDataset& data,
                    const intervalroc::EvaluationReport& report, const EmitFlags& emit) {
  const auto strict = intervalroc::build_curve(data, intervalroc::CurvePairing::kStrict);
  const auto permissive =
      intervalroc::build_curve(data, intervalroc::CurvePairing::kPermissive);
  if (emit.json) {
    bundle.add(prefix + "report.json", intervalroc::report_to_json(report));
    bundle.add(prefix + "diagnostics.json",
               diagnostics_json(curve_diagnostics(data)).dump(2) + "\n");
  }
  if (emit.csv || emit.svg) {
    bundle.add(prefix + "curves.csv", intervalroc::curves_to_csv(strict, permissive));
  }
  if (emit.svg) {
    bundle.add(prefix + "roc.svg", roc_square_svg(strict, permissive, report));
  }
}

void add_sweep(OutputBundle& bundle, const intervalroc::SweepTable& table,
               const EmitFlags& emit) {
  if (emit.json) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
      rows.push_back(ordered_json::parse(intervalroc::report_to_json(row.report)));
    }
    bundle.add("sweep.json", rows.dump(2) + "\n");
  }
  if (emit.csv || emit.svg) bundle.add("sweep.csv", intervalroc::sweep_to_csv(table));
  if (emit.svg) bundle.add("three_region.svg", three_region_svg(table));
}

OutputBundle run_eval(const EvalConfig& config) {
  const auto data = intervalroc::load_interval_csv(config.input);
  const auto report = intervalroc::evaluate(
      data, miscoverage_of(config.alpha_pos, config.alpha_neg), config.level);
  OutputBundle bundle;
  add_evaluation(bundle, "", data, report, config.emit);
  return bundle;
}

OutputBundle run_sweep(const SweepConfig& config) {
  const auto matrix = intervalroc::load_matrix_csv(config.input);
  const auto labels = intervalroc::load_labels_csv(config.labels);
  if (labels.size() != matrix.instances) {
    throw ContractError("labels file has " + std::to_string(labels.size()) +
                        " rows but the matrix has " + std::to_string(matrix.instances) +
                        " columns");
  }
  const auto levels = with_level_zero(config.levels);
  const auto table = intervalroc::confidence_sweep(
      [&](double level) {
        return intervalroc::percentile_intervals(matrix, level, labels,
                                                 config.quantile_rule);
      },
      levels, miscoverage_of(config.alpha_pos, config.alpha_neg));
  OutputBundle bundle;
  add_sweep(bundle, table, config.emit);
  return bundle;
}

OutputBundle run_bootstrap(const BootstrapConfig& config) {
  intervalroc::CsvSchema schema;
  schema.label_column = config.label_column;
  schema.zero_as_missing = config.zero_as_missing;
  const auto data = intervalroc::load_csv(config.input, schema);
  const auto split = intervalroc::stratified_split(data, config.train_fraction, config.seed);

  intervalroc::BootstrapOptions options;
  options.replicates = config.replicates;
  options.master_seed = config.seed;
  options.logistic.lambda = config.lambda;
  options.logistic.max_iterations = config.max_iterations;
  options.logistic.tolerance = config.tolerance;
  options.threads = config.threads;
  const auto matrix = intervalroc::bootstrap_predict(split.train, split.test, options);
  const auto& labels = split.test.labels;

  const auto full_model = intervalroc::fit_logistic(split.train, options.logistic);
  const double point_auc =
      intervalroc::point_auc(intervalroc::replicate_means(matrix), labels);

  const auto levels = with_level_zero(config.levels);
  const auto provider = [&](double level) {
    return intervalroc::percentile_intervals(matrix, level, labels, config.quantile_rule);
  };
  const auto table = intervalroc::confidence_sweep(provider, levels);

  OutputBundle bundle;
  bundle.add("prediction_matrix.csv", intervalroc::matrix_to_csv(matrix));
  bundle.add("test_labels.csv", intervalroc::labels_to_csv(labels));

  ordered_json sidecar;
  sidecar["replicates"] = matrix.replicates;
  sidecar["instances"] = matrix.instances;
  sidecar["master_seed"] = config.seed;
  sidecar["split_seed"] = intervalroc::derive_seed(config.seed, intervalroc::SeedStream::kSplit, 0);
  sidecar["replicate_seeds"] = matrix.replicate_seeds;
  sidecar["train_indices"] = split.train_indices;
  sidecar["test_indices"] = split.test_indices;
  sidecar["config"] = ordered_json::parse(manifest_json(config)).at("config");
  bundle.add("prediction_matrix.json", sidecar.dump(2) + "\n");

  ordered_json baseline;
  baseline["point_auc"] = point_auc;
  baseline["n_train"] = split.train.rows();
  baseline["n_test"] = split.test.rows();
  baseline["n_train_pos"] = split.train.count_label(1);
  baseline["n_test_pos"] = split.test.count_label(1);
  baseline["lambda"] = full_model.lambda;
  ordered_json dropped = ordered_json::array();
  for (const auto j : full_model.dropped_features) {
    dropped.push_back(split.train.feature_names[j]);
  }
  baseline["dropped_constant_features"] = dropped;
  bundle.add("baseline.json", baseline.dump(2) + "\n");

  add_sweep(bundle, table, config.emit);
  for (const double level : config.levels) {
    const auto intervals = provider(level);
    add_evaluation(bundle, "level_" + percent_label(level) + "/", intervals,
                   intervalroc::evaluate(intervals, std::nullopt, level), config.emit);
  }
  return bundle;
}

OutputBundle run_synth(const SynthConfig& config) {
  intervalroc::SyntheticConfig tmpl;
  tmpl.mu0 = config.mu0;
  tmpl.mu1 = config.mu1;
  tmpl.n_per_class = config.n_per_class;
  tmpl.seed = config.seed;
  const auto rows = intervalroc::validate_bounds(tmpl, config.alphas);

  OutputBundle bundle;
  if (config.emit.csv || config.emit.svg) {
    bundle.add("bounds.csv", intervalroc::validation_to_csv(rows));
  }
  if (config.emit.svg) bundle.add("bounds.svg", bound_band_svg(rows));
  if (config.emit.json) {
    ordered_json summary;
    summary["analytic_auc_star"] = intervalroc::analytic_auc_star(config.mu0, config.mu1);
    summary["empirical_auc_star"] = rows.empty() ? 0.0 : rows.front().auc_star;
    summary["all_contained"] =
        std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.contained; });
    bundle.add("summary.json", summary.dump(2) + "\n");
  }
  return bundle;
}

}  // namespace

EmitFlags parse_emit(std::string_view text) {
  EmitFlags flags{false, false, false};
  for (const auto& item : split_list(text)) {
    if (item == "json") {
      flags.json = true;
    } else if (item == "csv") {
      flags.csv = true;
    } else if (item == "svg") {
      flags.svg = true;
    } else {
      throw ContractError("unknown --emit kind '" + item + "' (expected json, csv, svg)");
    }
  }
  return flags;
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> values;
  for (const auto& item : split_list(text)) values.push_back(parse_number(item));
  return values;
}

std::vector<double> parse_percent_levels(std::string_view text) {
  auto values = parse_number_list(text);
  if (values.empty()) throw ContractError("level list is empty");
  for (auto& v : values) {
    if (!(v >= 0.0 && v < 100.0)) {
      throw ContractError("confidence level must be a percent in [0, 100)");
    }
    v /= 100.0;
  }
  return values;
}

intervalroc::QuantileRule parse_quantile_rule(std::string_view text) {
  if (text == "linear") return intervalroc::QuantileRule::kLinear;
  if (text == "inverted-cdf") return intervalroc::QuantileRule::kInvertedCdf;
  throw ContractError("unknown quantile rule '" + std::string(text) +
                      "' (expected linear or inverted-cdf)");
}

std::string_view to_string(intervalroc::QuantileRule rule) {
  return rule == intervalroc::QuantileRule::kLinear ? "linear" : "inverted-cdf";
}

std::string_view command_name(const RunConfig& config) {
  struct Visitor {
    std::string_view operator()(const EvalConfig&) const { return "eval"; }
    std::string_view operator()(const SweepConfig&) const { return "sweep"; }
    std::string_view operator()(const BootstrapConfig&) const { return "bootstrap"; }
    std::string_view operator()(const SynthConfig&) const { return "synth-bounds"; }
  };
  return std::visit(Visitor{}, config);
}

std::string manifest_json(const RunConfig& config) {
  ordered_json c;
  if (const auto* e = std::get_if<EvalConfig>(&config)) {
    c["input"] = absolute_string(e->input);
    c["alpha_pos"] = optional_json(e->alpha_pos);
    c["alpha_neg"] = optional_json(e->alpha_neg);
    c["level"] = optional_json(e->level);
    c["emit"] = emit_json(e->emit);
  } else if (const auto* s = std::get_if<SweepConfig>(&config)) {
    c["input"] = absolute_string(s->input);
    c["labels"] = absolute_string(s->labels);
    c["levels"] = s->levels;
    c["quantile_rule"] = to_string(s->quantile_rule);
    c["alpha_pos"] = optional_json(s->alpha_pos);
    c["alpha_neg"] = optional_json(s->alpha_neg);
    c["emit"] = emit_json(s->emit);
  } else if (const auto* b = std::get_if<BootstrapConfig>(&config)) {
    c["input"] = absolute_string(b->input);
    c["label_column"] = b->label_column;
    c["zero_as_missing"] = b->zero_as_missing;
    c["train_fraction"] = b->train_fraction;
    c["seed"] = b->seed;
    c["replicates"] = b->replicates;
    c["levels"] = b->levels;
    c["lambda"] = optional_json(b->lambda);
    c["max_iterations"] = b->max_iterations;
    c["tolerance"] = b->tolerance;
    c["quantile_rule"] = to_string(b->quantile_rule);
    c["threads"] = b->threads;
    c["emit"] = emit_json(b->emit);
  } else {
    const auto& y = std::get<SynthConfig>(config);
    c["alphas"] = y.alphas;
    c["n_per_class"] = y.n_per_class;
    c["seed"] = y.seed;
    c["mu0"] = y.mu0;
    c["mu1"] = y.mu1;
    c["emit"] = emit_json(y.emit);
  }
  ordered_json doc;
  doc["tool"] = "iroc";
  doc["version"] = kVersion;
  doc["command"] = command_name(config);
  doc["config"] = std::move(c);
  return doc.dump(2) + "\n";
}

RunConfig parse_manifest(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
    const auto& c = doc.at("config");
    const auto command = doc.at("command").get<std::string>();
    if (command == "eval") {
      EvalConfig e;
      e.input = c.at("input").get<std::string>();
      e.alpha_pos = optional_from_json(c.at("alpha_pos"));
      e.alpha_neg = optional_from_json(c.at("alpha_neg"));
      e.level = optional_from_json(c.at("level"));
      e.emit = emit_from_json(c.at("emit"));
      return e;
    }
    if (command == "sweep") {
      SweepConfig s;
      s.input = c.at("input").get<std::string>();
      s.labels = c.at("labels").get<std::string>();
      s.levels = c.at("levels").get<std::vector<double>>();
      s.quantile_rule = parse_quantile_rule(c.at("quantile_rule").get<std::string>());
      s.alpha_pos = optional_from_json(c.at("alpha_pos"));
      s.alpha_neg = optional_from_json(c.at("alpha_neg"));
      s.emit = emit_from_json(c.at("emit"));
      return s;
    }
    if (command == "bootstrap") {
      BootstrapConfig b;
      b.input = c.at("input").get<std::string>();
      b.label_column = c.at("label_column").get<std::string>();
      b.zero_as_missing = c.at("zero_as_missing").get<std::vector<std::string>>();
      b.train_fraction = c.at("train_fraction").get<double>();
      b.seed = c.at("seed").get<std::uint64_t>();
      b.replicates = c.at("replicates").get<std::size_t>();
      b.levels = c.at("levels").get<std::vector<double>>();
      b.lambda = optional_from_json(c.at("lambda"));
      b.max_iterations = c.at("max_iterations").get<int>();
      b.tolerance = c.at("tolerance").get<double>();
      b.quantile_rule = parse_quantile_rule(c.at("quantile_rule").get<std::string>());
      b.threads = c.at("threads").get<unsigned>();
      b.emit = emit_from_json(c.at("emit"));
      return b;
    }
    if (command == "synth-bounds") {
      SynthConfig y;
      y.alphas = c.at("alphas").get<std::vector<double>>();
      y.n_per_class = c.at("n_per_class").get<std::size_t>();
      y.seed = c.at("seed").get<std::uint64_t>();
      y.mu0 = c.at("mu0").get<double>();
      y.mu1 = c.at("mu1").get<double>();
      y.emit = emit_from_json(c.at("emit"));
      return y;
    }
    throw ContractError("manifest names unknown command '" + command + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string("malformed manifest: ") + e.what());
  }
}

RunConfig load_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open manifest '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_manifest(buffer.str());
}

CurveDiagnostics curve_diagnostics(const intervalroc::ClassedIntervalDataset& data) {
  using intervalroc::CurvePairing;
  using intervalroc::IntegrationRule;
  const auto regions = intervalroc::pairwise_counts(data);
  const auto strict = intervalroc::build_curve(data, CurvePairing::kStrict);
  const auto permissive = intervalroc::build_curve(data, CurvePairing::kPermissive);
  CurveDiagnostics d;
  d.auc_l_counting = intervalroc::auc_l(regions);
  d.auc_u_counting = intervalroc::auc_u(regions);
  d.auc_l_trapezoid = intervalroc::integrate_curve(strict, IntegrationRule::kTrapezoid);
  d.auc_u_trapezoid = intervalroc::integrate_curve(permissive, IntegrationRule::kTrapezoid);
  d.auc_l_step = intervalroc::integrate_curve(strict, IntegrationRule::kStep);
  d.auc_u_step = intervalroc::integrate_curve(permissive, IntegrationRule::kStep);
  return d;
}

OutputBundle run(const RunConfig& config) {
  struct Visitor {
    OutputBundle operator()(const EvalConfig& c) const { return run_eval(c); }
    OutputBundle operator()(const SweepConfig& c) const { return run_sweep(c); }
    OutputBundle operator()(const BootstrapConfig& c) const { return run_bootstrap(c); }
    OutputBundle operator()(const SynthConfig& c) const { return run_synth(c); }
  };
  OutputBundle bundle = std::visit(Visitor{}, config);
  bundle.add("manifest.json", manifest_json(config));
  return bundle;
}

}  // namespace iroc
