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

#ifndef LOTA_TOOLS_COMMANDS_HPP_
#define LOTA_TOOLS_COMMANDS_HPP_

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "options.hpp"

namespace lota_cli {

struct ExtractOutcome {
  int exit_code = kExitOk;
  nlohmann::ordered_json manifest;
};

// Extracts one patch per image under input_dir into out_dir/patches and
// writes out_dir/manifest.json.
ExtractOutcome RunExtract(const std::filesystem::path& input_dir,
                          const std::filesystem::path& out_dir, const ExtractOptions& opts,
                          std::ostream& log);

struct StageStats {
  std::string stage;
  size_t samples = 0;
  double mean_ms = 0.0;
  double median_ms = 0.0;
  double p95_ms = 0.0;
};

// Mean, median and nearest-rank p95 of millisecond samples.
StageStats Summarize(const std::string& stage, std::vector<double> samples_ms);

inline constexpr double kReferenceExtractionMs = 1.52;
inline constexpr double kExtractionBudgetMs = 10.0;

// Single-threaded latency benchmark. The first iteration is warm-up and is
// excluded from the statistics. Writes per-stage stats to csv_path.
int RunBench(const std::filesystem::path& input_dir, int iterations,
             const ExtractOptions& opts, const std::filesystem::path& csv_path,
             std::ostream& log, std::vector<StageStats>* stats_out = nullptr);

// One extraction pass per axis value under out_dir/<axis>-<value>.
int RunAblation(const std::filesystem::path& input_dir, const std::filesystem::path& out_dir,
                const std::string& axis, const std::vector<std::string>& values,
                const ExtractOptions& opts, std::ostream& log);

// Throws CliError for an unknown axis or an out-of-range value.
void ValidateAblation(const std::string& axis, const std::vector<std::string>& values);

struct MetricsReport {
  size_t samples = 0;
  double accuracy = 0.0;
  double average_precision = 0.0;
};

// Reads a score CSV (id, prob_fake, label[, generator]) and prints ACC / AP.
MetricsReport RunMetrics(const std::filesystem::path& scores_csv, double threshold,
                         std::ostream& log);

// Applies blur and/or JPEG degradation to a file or every image in a
// directory and writes PNGs under out.
int RunDegrade(const std::filesystem::path& input, const std::filesystem::path& out,
               double blur_sigma, int jpeg_quality, std::ostream& log);

}  // namespace lota_cli

#endif  // LOTA_TOOLS_COMMANDS_HPP_
