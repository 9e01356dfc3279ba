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

#ifndef LOTA_TOOLS_OPTIONS_HPP_
#define LOTA_TOOLS_OPTIONS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "handles.hpp"

namespace lota_cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitStartup = 1;  // bad flags, missing input, unwritable output
inline constexpr int kExitPartial = 2;  // finished, but some records carry errors

// Startup or parameter problem; reported before any work is done.
class CliError : public std::runtime_error {
 public:
  explicit CliError(const std::string& what) : std::runtime_error(what) {}
};

// Flags shared by extract, bench and ablate.
struct ExtractOptions {
  int planes = 3;
  std::string norm = "threshold";
  int patch_size = 32;
  std::string strategy = "max";
  uint64_t seed = 0;
  std::string resize_filter = "nearest";
  double blur_sigma = 0.0;
  int jpeg_quality = 0;  // 0 = no JPEG degradation
  int jobs = 0;          // 0 = hardware concurrency
  bool emit_nbc = false;
  std::string labels_csv;
};

// Builds and validates a library config; throws CliError on bad values.
ConfigPtr BuildConfig(const ExtractOptions& opts);

nlohmann::ordered_json ConfigToJson(const ExtractOptions& opts);

// Worker count after applying --jobs and the LOTA_THREADS cap.
int EffectiveJobs(int requested);

// Per-image selection seed: independent of processing order.
uint64_t ImageSeed(uint64_t base_seed, const std::string& relative_path);

}  // namespace lota_cli

#endif  // LOTA_TOOLS_OPTIONS_HPP_
