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

#ifndef LOTA_TOOLS_MANIFEST_HPP_
#define LOTA_TOOLS_MANIFEST_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lota/lota.h"

namespace lota_cli {

inline constexpr const char* kManifestSchema = "lota.manifest/1";

// The timing stages reported per record, in manifest order.
inline constexpr const char* kStageNames[] = {
    "decode", "degrade", "noise", "resize", "scoring", "error_extraction", "total"};

double StageValue(const lota_timings& t, int stage);

struct ExtractionRecord {
  std::string source;  // relative to the dataset root
  std::optional<bool> fake;
  std::string generator;
  std::string split;
  std::string config_hash;
  bool ok = false;
  std::string error;
  lota_patch_info patch{};
  lota_timings timings{};
  std::string output;      // raw patch PNG, relative to the output directory
  std::string nbc_output;  // upsampled patch PNG, when requested
};

nlohmann::ordered_json RecordToJson(const ExtractionRecord& r);

// Counts per label and per generator, plus mean/median stage timings over
// successful records.
nlohmann::ordered_json BuildSummary(const std::vector<ExtractionRecord>& records);

nlohmann::ordered_json BuildManifest(const nlohmann::ordered_json& config,
                                     const std::string& config_hash,
                                     const std::vector<ExtractionRecord>& records);

const char* LabelName(const std::optional<bool>& fake);

}  // namespace lota_cli

#endif  // LOTA_TOOLS_MANIFEST_HPP_
