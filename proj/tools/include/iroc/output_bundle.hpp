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
#include <map>
#include <string>

namespace iroc {

/// Files produced by one run, held in memory until commit() writes each one
/// to a temporary sibling and renames it into place.
class OutputBundle {
 public:
  void add(const std::string& relative_path, std::string content);
  bool contains(const std::string& relative_path) const;
  const std::string& get(const std::string& relative_path) const;
  const std::map<std::string, std::string>& files() const { return files_; }

  void commit(const std::filesystem::path& out_dir) const;

 private:
  std::map<std::string, std::string> files_;
};

}  // namespace iroc
