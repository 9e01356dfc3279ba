// Copyright 2026 The LOTA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "options.hpp"

namespace fs = std::filesystem;

namespace lota_cli {

namespace {

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool IsImageFile(const fs::path& p) {
  const std::string ext = Lower(p.extension().string());
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

void InferLabelFromPath(DatasetEntry& entry) {
  std::vector<std::string> dirs;
  for (const auto& part : fs::path(entry.relative).parent_path()) dirs.push_back(part.string());
  for (int i = static_cast<int>(dirs.size()) - 1; i >= 0; --i) {
    const std::string d = Lower(dirs[i]);
    if (d != "ai" && d != "nature") continue;
    entry.fake = (d == "ai");
    if (i >= 2) {
      entry.generator = dirs[0];
      entry.split = dirs[i - 1];
    } else if (i == 1) {
      entry.generator = dirs[0];
    }
    return;
  }
}

std::vector<DatasetEntry> ScanDataset(const fs::path& root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw CliError("input directory does not exist: " + root.string());
  }
  std::vector<DatasetEntry> entries;
  for (auto it = fs::recursive_directory_iterator(root, ec);
       !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (!it->is_regular_file() || !IsImageFile(it->path())) continue;
    DatasetEntry e;
    e.path = it->path();
    e.relative = fs::relative(it->path(), root).generic_string();
    InferLabelFromPath(e);
    entries.push_back(std::move(e));
  }
  if (ec) throw CliError("cannot walk " + root.string() + ": " + ec.message());
  std::sort(entries.begin(), entries.end(),
            [](const DatasetEntry& a, const DatasetEntry& b) { return a.relative < b.relative; });
  return entries;
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(Trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(Trim(cur));
  return fields;
}

std::optional<bool> ParseLabel(const std::string& text) {
  const std::string t = Lower(Trim(text));
  if (t == "fake" || t == "ai" || t == "1") return true;
  if (t == "real" || t == "nature" || t == "0") return false;
  return std::nullopt;
}

std::map<std::string, LabelOverride> LoadLabelCsv(const fs::path& csv) {
  std::ifstream in(csv);
  if (!in) throw CliError("cannot open label file " + csv.string());
  std::string line;
  if (!std::getline(in, line)) throw CliError("label file is empty: " + csv.string());
  const auto header = SplitCsvLine(line);
  auto column = [&](const std::string& name) -> int {
    for (size_t i = 0; i < header.size(); ++i) {
      if (Lower(header[i]) == name) return static_cast<int>(i);
    }
    return -1;
  };
  const int path_col = column("path");
  const int label_col = column("label");
  const int gen_col = column("generator");
  if (path_col < 0 || label_col < 0) {
    throw CliError("label file needs 'path' and 'label' columns: " + csv.string());
  }

  std::map<std::string, LabelOverride> labels;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const auto f = SplitCsvLine(line);
    if (static_cast<int>(f.size()) <= std::max(path_col, label_col)) {
      throw CliError("label file line " + std::to_string(line_no) + ": too few columns");
    }
    const auto fake = ParseLabel(f[label_col]);
    if (!fake) {
      throw CliError("label file line " + std::to_string(line_no) + ": unknown label '" +
                     f[label_col] + "'");
    }
    LabelOverride o{*fake, ""};
    if (gen_col >= 0 && gen_col < static_cast<int>(f.size())) o.generator = f[gen_col];
    labels[fs::path(f[path_col]).lexically_normal().generic_string()] = o;
  }
  return labels;
}

void ApplyLabels(std::vector<DatasetEntry>& entries,
                 const std::map<std::string, LabelOverride>& labels) {
  for (DatasetEntry& e : entries) {
    const auto it = labels.find(e.relative);
    if (it == labels.end()) continue;
    e.fake = it->second.fake;
    if (!it->second.generator.empty()) e.generator = it->second.generator;
  }
}

}  // namespace lota_cli
