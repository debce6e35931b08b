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

#include "intervalroc/report_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "intervalroc/errors.hpp"
#include "json.hpp"

namespace intervalroc {

using nlohmann::ordered_json;

std::string format_decimal(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

std::string report_to_json(const EvaluationReport& report, int indent) {
  ordered_json doc;
  doc["auc_l"] = report.auc_l;
  doc["auc_u"] = report.auc_u;
  doc["p_correct"] = report.three_region.p_correct();
  doc["p_overlap"] = report.three_region.p_overlap();
  doc["p_incorrect"] = report.three_region.p_incorrect();
  doc["uauc"] = report.uauc ? ordered_json(*report.uauc) : ordered_json(nullptr);
  doc["abstention_rate"] = report.abstention_rate;
  if (report.bounds) {
    const auto& b = *report.bounds;
    doc["bounds"] = ordered_json{{"lower", b.lower_bound},
                                 {"upper", b.upper_bound},
                                 {"p_pair", b.p_pair},
                                 {"raw_lower", b.raw_lower},
                                 {"raw_upper", b.raw_upper}};
  } else {
    doc["bounds"] = nullptr;
  }
  doc["confidence_level"] = report.confidence_level
                                ? ordered_json(*report.confidence_level)
                                : ordered_json(nullptr);
  doc["n_pos"] = report.n_pos;
  doc["n_neg"] = report.n_neg;
  return doc.dump(indent) + "\n";
}

std::string sweep_to_csv(const SweepTable& table) {
  std::ostringstream out;
  out << "level,auc_l,auc_u,p_correct,p_overlap,p_incorrect,uauc,"
         "abstention_rate,n_pos,n_neg\n";
  for (const auto& row : table.rows) {
    const auto& r = row.report;
    out << format_decimal(row.level) << ',' << format_decimal(r.auc_l) << ','
        << format_decimal(r.auc_u) << ','
        << format_decimal(r.three_region.p_correct()) << ','
        << format_decimal(r.three_region.p_overlap()) << ','
        << format_decimal(r.three_region.p_incorrect()) << ','
        << (r.uauc ? format_decimal(*r.uauc) : std::string()) << ','
        << format_decimal(r.abstention_rate) << ',' << r.n_pos << ','
        << r.n_neg << '\n';
  }
  return out.str();
}

std::string curves_to_csv(const RocCurve& strict, const RocCurve& permissive) {
  std::ostringstream out;
  out << "threshold,x,y,pairing\n";
  for (const auto* curve : {&strict, &permissive}) {
    for (const auto& p : curve->points) {
      out << format_decimal(p.threshold) << ',' << format_decimal(p.x) << ','
          << format_decimal(p.y) << ',' << to_string(curve->pairing) << '\n';
    }
  }
  return out.str();
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    const auto first = field.find_first_not_of(" \t\"");
    const auto last = field.find_last_not_of(" \t\r\"");
    fields.push_back(first == std::string::npos ? std::string()
                                                : field.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

bool to_double(const std::string& text, double& out) {
  const char* begin = text.data();
  if (!text.empty() && text.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size() && std::isfinite(out);
}

}  // namespace

ClassedIntervalDataset parse_interval_csv(std::istream& in, std::string_view source_name) {
  const std::string source(source_name);
  std::string line;
  if (!std::getline(in, line)) throw ContractError(source + ": empty file");
  const auto header = split_row(line);
  auto find_column = [&](const char* name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
      throw ContractError(source + ": header lacks a '" + name + "' column");
    }
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t label_col = find_column("label");
  const std::size_t lower_col = find_column("lower");
  const std::size_t upper_col = find_column("upper");

  ClassedIntervalDataset data;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split_row(line);
    const std::string where = source + ":" + std::to_string(line_no) + ": ";
    if (fields.size() != header.size()) {
      throw ContractError(where + "expected " + std::to_string(header.size()) +
                          " fields, found " + std::to_string(fields.size()));
    }
    double label = 0.0, lower = 0.0, upper = 0.0;
    if (!to_double(fields[label_col], label) || (label != 0.0 && label != 1.0)) {
      throw ContractError(where + "label must be 0 or 1, got '" + fields[label_col] + "'");
    }
    if (!to_double(fields[lower_col], lower) || !to_double(fields[upper_col], upper)) {
      throw ContractError(where + "unparseable interval endpoint");
    }
    if (lower > upper) {
      throw ContractError(where + "lower " + fields[lower_col] + " exceeds upper " +
                          fields[upper_col]);
    }
    (label == 1.0 ? data.positives : data.negatives).emplace_back(lower, upper);
  }
  data.require_both_classes();
  return data;
}

ClassedIntervalDataset load_interval_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open '" + path.string() + "'");
  return parse_interval_csv(in, path.string());
}

std::string intervals_to_csv(const ClassedIntervalDataset& data) {
  std::ostringstream out;
  out << "label,lower,upper\n";
  for (const auto& i : data.negatives) {
    out << "0," << format_decimal(i.lower()) << ',' << format_decimal(i.upper()) << '\n';
  }
  for (const auto& i : data.positives) {
    out << "1," << format_decimal(i.lower()) << ',' << format_decimal(i.upper()) << '\n';
  }
  return out.str();
}

}  // namespace intervalroc
