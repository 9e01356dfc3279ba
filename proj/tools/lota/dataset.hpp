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

#ifndef LOTA_TOOLS_DATASET_HPP_
#define LOTA_TOOLS_DATASET_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lota_cli {

// One input image. Labels come from an "ai" (fake) or "nature" (real) folder
// in the GenImage layout <subset>/<split>/{ai,nature}/<file>, or from an
// explicit label CSV.
struct DatasetEntry {
  std::filesystem::path path;
  std::string relative;  // generic-format path relative to the dataset root
  std::optional<bool> fake;
  std::string generator;  // subset name, empty when unknown
  std::string split;
};

// Recursively lists *.png / *.jpg / *.jpeg under root, sorted by relative
// path. Throws CliError when root is not a directory.
std::vector<DatasetEntry> ScanDataset(const std::filesystem::path& root);

// Label derivation from a relative path alone.
void InferLabelFromPath(DatasetEntry& entry);

// Splits one CSV line; supports double-quoted fields with "" escapes.
std::vector<std::string> SplitCsvLine(const std::string& line);

// Parses fake/ai/1 and real/nature/0 (case-insensitive).
std::optional<bool> ParseLabel(const std::string& text);

struct LabelOverride {
  bool fake;
  std::string generator;
};

// CSV with header containing "path" and "label" columns and an optional
// "generator" column. Paths are relative to the dataset root.
std::map<std::string, LabelOverride> LoadLabelCsv(const std::filesystem::path& csv);

void ApplyLabels(std::vector<DatasetEntry>& entries,
                 const std::map<std::string, LabelOverride>& labels);

}  // namespace lota_cli

#endif  // LOTA_TOOLS_DATASET_HPP_
