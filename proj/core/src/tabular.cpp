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

#include "intervalroc/tabular.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>

#include "intervalroc/errors.hpp"
#include "intervalroc/seeding.hpp"

namespace intervalroc {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

bool parse_double(std::string_view text, double& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size() && std::isfinite(out);
}

std::size_t column_index(const std::vector<std::string_view>& header,
                         const std::string& name, std::string_view source) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw ContractError(std::string(source) + ": column '" + name +
                        "' not found in header");
  }
  return static_cast<std::size_t>(it - header.begin());
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::size_t TabularDataset::count_label(int label) const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), label));
}

TabularDataset TabularDataset::subset(std::span<const std::size_t> indices) const {
  TabularDataset out;
  out.feature_names = feature_names;
  out.labels.reserve(indices.size());
  out.features.reserve(indices.size() * cols());
  for (const std::size_t r : indices) {
    const auto values = row(r);
    out.features.insert(out.features.end(), values.begin(), values.end());
    out.labels.push_back(labels[r]);
  }
  return out;
}

TabularDataset load_csv(const std::filesystem::path& path, const CsvSchema& schema) {
  std::ifstream in(path);
  if (!in) {
    throw ContractError("cannot open '" + path.string() + "'");
  }
  return parse_csv(in, schema, path.string());
}

TabularDataset parse_csv(std::istream& in, const CsvSchema& schema,
                         std::string_view source_name) {
  const std::string source(source_name);
  std::string header_line;
  if (!std::getline(in, header_line) || trim(header_line).empty()) {
    throw ContractError(source + ": empty file (no header row)");
  }
  const auto header = split_fields(header_line);
  const std::size_t label_col = column_index(header, schema.label_column, source);

  std::vector<std::size_t> feature_cols;
  TabularDataset data;
  if (schema.feature_columns.empty()) {
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (c == label_col) continue;
      feature_cols.push_back(c);
      data.feature_names.emplace_back(header[c]);
    }
  } else {
    for (const auto& name : schema.feature_columns) {
      feature_cols.push_back(column_index(header, name, source));
      data.feature_names.push_back(name);
    }
  }
  if (feature_cols.empty()) {
    throw ContractError(source + ": no feature columns");
  }

  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != header.size()) {
      throw ContractError(source + ":" + std::to_string(line_no) + ": expected " +
                          std::to_string(header.size()) + " fields, found " +
                          std::to_string(fields.size()));
    }
    double label = 0.0;
    if (!parse_double(fields[label_col], label)) {
      throw ContractError(source + ":" + std::to_string(line_no) +
                          ": unparseable label '" + std::string(fields[label_col]) + "'");
    }
    if (label != 0.0 && label != 1.0) {
      throw ContractError(source + ":" + std::to_string(line_no) +
                          ": non-binary label '" + std::string(fields[label_col]) +
                          "' (labels must be 0 or 1)");
    }
    data.labels.push_back(static_cast<int>(label));
    for (std::size_t k = 0; k < feature_cols.size(); ++k) {
      double value = 0.0;
      const auto cell = fields[feature_cols[k]];
      if (!parse_double(cell, value)) {
        throw ContractError(source + ":" + std::to_string(line_no) +
                            ": unparseable value '" + std::string(cell) +
                            "' in column '" + data.feature_names[k] + "'");
      }
      data.features.push_back(value);
    }
  }
  if (data.rows() == 0) {
    throw ContractError(source + ": no data rows");
  }

  for (const auto& name : schema.zero_as_missing) {
    const auto it = std::find(data.feature_names.begin(), data.feature_names.end(), name);
    if (it == data.feature_names.end()) {
      throw ContractError(source + ": zero-as-missing column '" + name +
                          "' is not a feature column");
    }
    const auto c = static_cast<std::size_t>(it - data.feature_names.begin());
    std::vector<double> present;
    for (std::size_t r = 0; r < data.rows(); ++r) {
      if (data.at(r, c) != 0.0) present.push_back(data.at(r, c));
    }
    if (present.empty()) {
      throw ContractError(source + ": column '" + name + "' has no non-zero values");
    }
    const double fill = median_of(std::move(present));
    for (std::size_t r = 0; r < data.rows(); ++r) {
      double& cell = data.features[r * data.cols() + c];
      if (cell == 0.0) cell = fill;
    }
  }
  return data;
}

TrainTestSplit stratified_split(const TabularDataset& data, double train_fraction,
                                std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw ContractError("train fraction must lie in (0, 1)");
  }
  std::vector<std::size_t> by_class[2];
  for (std::size_t r = 0; r < data.rows(); ++r) {
    by_class[data.labels[r]].push_back(r);
  }
  for (int c = 0; c < 2; ++c) {
    if (by_class[c].size() < 2) {
      throw ContractError("class " + std::to_string(c) + " has " +
                          std::to_string(by_class[c].size()) +
                          " rows; stratified split needs at least 2");
    }
  }

  std::size_t take[2];
  for (int c = 0; c < 2; ++c) {
    take[c] = static_cast<std::size_t>(
        std::floor(train_fraction * static_cast<double>(by_class[c].size())));
  }
  const auto target = static_cast<std::size_t>(
      std::llround(train_fraction * static_cast<double>(data.rows())));
  const int larger = by_class[1].size() > by_class[0].size() ? 1 : 0;
  if (take[0] + take[1] < target) take[larger] += target - take[0] - take[1];
  for (int c = 0; c < 2; ++c) {
    take[c] = std::clamp<std::size_t>(take[c], 1, by_class[c].size() - 1);
  }

  std::mt19937_64 rng(derive_seed(seed, SeedStream::kSplit, 0));
  TrainTestSplit split;
  for (int c = 0; c < 2; ++c) {
    auto& idx = by_class[c];
    std::shuffle(idx.begin(), idx.end(), rng);
    split.train_indices.insert(split.train_indices.end(), idx.begin(),
                               idx.begin() + static_cast<std::ptrdiff_t>(take[c]));
    split.test_indices.insert(split.test_indices.end(),
                              idx.begin() + static_cast<std::ptrdiff_t>(take[c]),
                              idx.end());
  }
  std::sort(split.train_indices.begin(), split.train_indices.end());
  std::sort(split.test_indices.begin(), split.test_indices.end());
  split.train = data.subset(split.train_indices);
  split.test = data.subset(split.test_indices);
  return split;
}

}  // namespace intervalroc
