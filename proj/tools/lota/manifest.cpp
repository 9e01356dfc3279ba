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

#include "manifest.hpp"

#include <algorithm>
#include <map>

namespace lota_cli {

using nlohmann::ordered_json;

namespace {

double Median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double Mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

double StageValue(const lota_timings& t, int stage) {
  switch (stage) {
    case 0: return t.decode_us;
    case 1: return t.degrade_us;
    case 2: return t.noise_us;
    case 3: return t.resize_us;
    case 4: return t.scoring_us;
    case 5: return t.error_extraction_us;
    default: return t.total_us;
  }
}

const char* LabelName(const std::optional<bool>& fake) {
  if (!fake) return "unknown";
  return *fake ? "fake" : "real";
}

ordered_json RecordToJson(const ExtractionRecord& r) {
  ordered_json j;
  j["source"] = r.source;
  j["label"] = r.fake ? ordered_json(LabelName(r.fake)) : ordered_json(nullptr);
  j["generator"] = r.generator.empty() ? ordered_json(nullptr) : ordered_json(r.generator);
  j["split"] = r.split.empty() ? ordered_json(nullptr) : ordered_json(r.split);
  j["config_hash"] = r.config_hash;
  j["status"] = r.ok ? "ok" : "error";
  if (r.ok) {
    j["error"] = nullptr;
    j["patch"] = {{"row", r.patch.row_index},   {"col", r.patch.col_index},
                  {"x", r.patch.origin_x},      {"y", r.patch.origin_y},
                  {"size", r.patch.size},       {"grid_rows", r.patch.grid_rows},
                  {"grid_cols", r.patch.grid_cols}};
    j["score"] = r.patch.score;
    j["output"] = r.output;
    j["nbc_output"] = r.nbc_output.empty() ? ordered_json(nullptr) : ordered_json(r.nbc_output);
  } else {
    j["error"] = r.error;
    j["patch"] = nullptr;
    j["score"] = nullptr;
    j["output"] = nullptr;
    j["nbc_output"] = nullptr;
  }
  ordered_json t;
  for (int s = 0; s < 7; ++s) t[kStageNames[s]] = StageValue(r.timings, s);
  j["timings_us"] = t;
  return j;
}

ordered_json BuildSummary(const std::vector<ExtractionRecord>& records) {
  size_t ok = 0;
  std::map<std::string, size_t> labels{{"fake", 0}, {"real", 0}, {"unknown", 0}};
  std::map<std::string, std::map<std::string, size_t>> generators;
  std::vector<std::vector<double>> stages(7);
  for (const ExtractionRecord& r : records) {
    ++labels[LabelName(r.fake)];
    if (!r.generator.empty()) ++generators[r.generator][LabelName(r.fake)];
    if (!r.ok) continue;
    ++ok;
    for (int s = 0; s < 7; ++s) stages[s].push_back(StageValue(r.timings, s));
  }

  ordered_json summary;
  summary["records"] = records.size();
  summary["ok"] = ok;
  summary["errors"] = records.size() - ok;
  summary["labels"] = labels;
  ordered_json gen = ordered_json::object();
  for (const auto& [name, counts] : generators) gen[name] = counts;
  summary["generators"] = gen;
  ordered_json timing;
  for (int s = 0; s < 7; ++s) {
    timing[kStageNames[s]] = {{"mean", Mean(stages[s])}, {"median", Median(stages[s])}};
  }
  summary["timings_us"] = timing;
  return summary;
}

ordered_json BuildManifest(const ordered_json& config, const std::string& config_hash,
                           const std::vector<ExtractionRecord>& records) {
  ordered_json m;
  m["schema"] = kManifestSchema;
  m["tool_version"] = lota_version();
  m["config_hash"] = config_hash;
  m["config"] = config;
  ordered_json recs = ordered_json::array();
  for (const ExtractionRecord& r : records) recs.push_back(RecordToJson(r));
  m["records"] = std::move(recs);
  m["summary"] = BuildSummary(records);
  return m;
}

}  // namespace lota_cli
