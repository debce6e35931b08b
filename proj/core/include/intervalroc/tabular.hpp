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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace intervalroc {

/// Row-major feature matrix with binary labels.
struct TabularDataset {
  std::vector<double> features;  // rows() * cols() values
  std::vector<int> labels;       // 0 or 1
  std::vector<std::string> feature_names;

  std::size_t rows() const noexcept { return labels.size(); }
  std::size_t cols() const noexcept { return feature_names.size(); }
  std::span<const double> row(std::size_t r) const {
    return {features.data() + r * cols(), cols()};
  }
  double at(std::size_t r, std::size_t c) const { return features[r * cols() + c]; }
  std::size_t count_label(int label) const;

  /// Rows at the given indices, in that order (duplicates allowed).
  TabularDataset subset(std::span<const std::size_t> indices) const;
};

struct CsvSchema {
  std::string label_column = "Outcome";
  // Empty means every column except the label.
  std::vector<std::string> feature_columns;
  // Columns in which an exact 0 marks a missing value; such cells are
  // replaced by the median of the non-zero values of that column. Empty
  // (the default) passes zeros through untouched.
  std::vector<std::string> zero_as_missing;
};

/// Reads a comma-separated file with a header row. Throws ContractError for a
/// missing or empty file, unknown columns, unparseable cells (with line
/// numbers) or labels other than 0/1.
TabularDataset load_csv(const std::filesystem::path& path,
                        const CsvSchema& schema = {});
TabularDataset parse_csv(std::istream& in, const CsvSchema& schema,
                         std::string_view source_name = "<stream>");

struct TrainTestSplit {
  TabularDataset train;
  TabularDataset test;
  std::vector<std::size_t> train_indices;  // ascending
  std::vector<std::size_t> test_indices;   // ascending
};

/// Per-class proportional split. Each class contributes
/// floor(train_fraction * n_class) rows to train; any shortfall against
/// round(train_fraction * n) goes to the larger class. Every class keeps at
/// least one row on each side. Throws ContractError if a class has fewer than
/// two rows or the fraction is outside (0, 1).
TrainTestSplit stratified_split(const TabularDataset& data,
                                double train_fraction, std::uint64_t seed);

}  // namespace intervalroc
