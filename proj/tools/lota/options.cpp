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

#include "options.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace lota_cli {

namespace {

lota_resize_filter ParseFilter(const std::string& name) {
  if (name == "nearest") return LOTA_FILTER_NEAREST;
  if (name == "bilinear") return LOTA_FILTER_BILINEAR;
  throw CliError("--resize-filter must be nearest or bilinear, got '" + name + "'");
}

}  // namespace

ConfigPtr BuildConfig(const ExtractOptions& opts) {
  lota_config* raw = nullptr;
  Check(lota_config_create(&raw));
  ConfigPtr cfg(raw);

  lota_norm_mode norm;
  if (opts.norm == "threshold") {
    norm = LOTA_NORM_THRESHOLD;
  } else if (opts.norm == "scale") {
    norm = LOTA_NORM_SCALE;
  } else {
    throw CliError("--norm must be threshold or scale, got '" + opts.norm + "'");
  }

  lota_strategy strategy;
  if (opts.strategy == "max") {
    strategy = LOTA_STRATEGY_MAX;
  } else if (opts.strategy == "min") {
    strategy = LOTA_STRATEGY_MIN;
  } else if (opts.strategy == "random") {
    strategy = LOTA_STRATEGY_RANDOM;
  } else {
    throw CliError("--strategy must be max, min or random, got '" + opts.strategy + "'");
  }

  const lota_resize_filter filter = ParseFilter(opts.resize_filter);
  Check(lota_config_set_planes(cfg.get(), opts.planes));
  Check(lota_config_set_norm(cfg.get(), norm));
  Check(lota_config_set_patch_size(cfg.get(), opts.patch_size));
  Check(lota_config_set_strategy(cfg.get(), strategy, opts.seed));
  Check(lota_config_set_noise_filter(cfg.get(), filter));
  Check(lota_config_set_patch_filter(cfg.get(), filter));
  Check(lota_config_set_blur_sigma(cfg.get(), opts.blur_sigma));
  Check(lota_config_set_jpeg_quality(cfg.get(), opts.jpeg_quality));
  if (lota_config_validate(cfg.get()) != LOTA_OK) throw CliError(lota_last_error());
  return cfg;
}

nlohmann::ordered_json ConfigToJson(const ExtractOptions& opts) {
  return {
      {"planes", opts.planes},
      {"norm", opts.norm},
      {"working_resolution", {256, 256}},
      {"patch_size", opts.patch_size},
      {"strategy", opts.strategy},
      {"seed", opts.seed},
      {"resize_filter", opts.resize_filter},
      {"output_resolution", {256, 256}},
      {"blur_sigma", opts.blur_sigma},
      {"jpeg_quality", opts.jpeg_quality},
  };
}

int EffectiveJobs(int requested) {
  int jobs = requested > 0 ? requested
                           : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* cap = std::getenv("LOTA_THREADS")) {
    const int limit = std::atoi(cap);
    if (limit > 0) jobs = std::min(jobs, limit);
  }
  return std::max(jobs, 1);
}

uint64_t ImageSeed(uint64_t base_seed, const std::string& relative_path) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : relative_path) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  // splitmix64 finalizer over the combined value
  uint64_t z = base_seed + h + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace lota_cli
