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

#include "iroc/output_bundle.hpp"

#include <fstream>
#include <stdexcept>

namespace iroc {

void OutputBundle::add(const std::string& relative_path, std::string content) {
  files_[relative_path] = std::move(content);
}

bool OutputBundle::contains(const std::string& relative_path) const {
  return files_.count(relative_path) != 0;
}

const std::string& OutputBundle::get(const std::string& relative_path) const {
  return files_.at(relative_path);
}

void OutputBundle::commit(const std::filesystem::path& out_dir) const {
  namespace fs = std::filesystem;
  for (const auto& [name, content] : files_) {
    const fs::path target = out_dir / name;
    fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
      out << content;
      out.flush();
      if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    fs::rename(tmp, target);
  }
}

}  // namespace iroc
