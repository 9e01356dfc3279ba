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

#include "core/pipeline.hpp"

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>

#include "core/codec.hpp"
#include "core/degrade.hpp"
#include "core/error.hpp"

namespace lota {

namespace {

using Clock = std::chrono::steady_clock;

double MicrosSince(Clock::time_point start, Clock::time_point end) {
  return std::chrono::duration<double, std::micro>(end - start).count();
}

uint64_t Fnv1a64(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ExtractionResult ExtractTimed(const RasterImage& raw, const PipelineConfig& cfg,
                              Clock::time_point start) {
  ExtractionResult result{ScoredPatch{}, 0, 0, {}, NoiseImage{RasterImage(1, 1), cfg.norm}, {}};
  StageTimings& t = result.timings;

  const RasterImage* source = &raw;
  RasterImage degraded(1, 1);
  auto mark = Clock::now();
  if (cfg.blur_sigma > 0.0 || cfg.jpeg_quality > 0) {
    degraded = raw;
    if (cfg.blur_sigma > 0.0) degraded = GaussianBlur(degraded, cfg.blur_sigma);
    if (cfg.jpeg_quality > 0) degraded = JpegRoundTrip(degraded, cfg.jpeg_quality);
    source = &degraded;
    const auto now = Clock::now();
    t.degrade_us = MicrosSince(mark, now);
    mark = now;
  }

  const auto extraction_start = mark;
  const NoiseImage noise =
      Normalize(ComposeLowBits(Decompose(*source), cfg.plane_count), cfg.norm);
  auto now = Clock::now();
  t.noise_us = MicrosSince(mark, now);
  mark = now;

  result.working_noise = {
      Resize(noise.pixels, cfg.working_width, cfg.working_height, cfg.noise_filter),
      noise.mode};
  now = Clock::now();
  t.resize_us = MicrosSince(mark, now);
  mark = now;

  std::vector<ScoredPatch> patches = Partition(result.working_noise, cfg.patch_size);
  ScoreAll(patches);
  const size_t chosen = SelectIndex(patches, cfg.selection);
  now = Clock::now();
  t.scoring_us = MicrosSince(mark, now);
  t.error_extraction_us = MicrosSince(extraction_start, now);

  result.grid_rows = result.working_noise.height() / cfg.patch_size;
  result.grid_cols = result.working_noise.width() / cfg.patch_size;
  result.grid_scores.reserve(patches.size());
  for (const ScoredPatch& p : patches) result.grid_scores.push_back(*p.score);
  result.patch = std::move(patches[chosen]);
  t.total_us = MicrosSince(start, Clock::now());
  return result;
}

}  // namespace

void PipelineConfig::Validate() const {
  auto fail = [](const std::string& msg) { throw ParameterError(msg); };
  if (plane_count < 1 || plane_count > kBitPlanes) {
    fail("plane count must be in 1..8, got " + std::to_string(plane_count));
  }
  if (working_width < 1 || working_height < 1) fail("working resolution must be positive");
  if (output_width < 1 || output_height < 1) fail("output resolution must be positive");
  if (patch_size < 2) fail("patch size must be at least 2, got " + std::to_string(patch_size));
  if (patch_size > working_width || patch_size > working_height) {
    fail("patch size " + std::to_string(patch_size) + " exceeds working resolution " +
         std::to_string(working_width) + "x" + std::to_string(working_height));
  }
  if (!(blur_sigma >= 0.0) || !std::isfinite(blur_sigma)) {
    fail("blur sigma must be a finite value >= 0");
  }
  if (jpeg_quality < 0 || jpeg_quality > 100) {
    fail("JPEG quality must be in 1..100 (0 disables), got " + std::to_string(jpeg_quality));
  }
}

std::string PipelineConfig::Canonical() const {
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "planes=%d;norm=%s;working=%dx%d;patch=%d;strategy=%s;seed=%" PRIu64
                ";noise_filter=%s;output=%dx%d;patch_filter=%s;blur_sigma=%.17g;"
                "jpeg_quality=%d",
                plane_count, ToString(norm), working_width, working_height, patch_size,
                ToString(selection.strategy), selection.seed, ToString(noise_filter),
                output_width, output_height, ToString(patch_filter), blur_sigma,
                jpeg_quality);
  return buf;
}

std::string ConfigHash(const PipelineConfig& cfg) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, Fnv1a64(cfg.Canonical()));
  return buf;
}

const char* ToString(NormMode mode) {
  return mode == NormMode::kScale ? "scale" : "threshold";
}

const char* ToString(Strategy strategy) {
  switch (strategy) {
    case Strategy::kMax: return "max";
    case Strategy::kMin: return "min";
    case Strategy::kRandom: return "random";
  }
  return "?";
}

const char* ToString(ResizeFilter filter) {
  return filter == ResizeFilter::kBilinear ? "bilinear" : "nearest";
}

ExtractionResult Extract(const RasterImage& img, const PipelineConfig& cfg) {
  cfg.Validate();
  return ExtractTimed(img, cfg, Clock::now());
}

ExtractionResult ExtractEncoded(std::span<const uint8_t> bytes, const PipelineConfig& cfg) {
  cfg.Validate();
  const auto start = Clock::now();
  const RasterImage img = DecodeImage(bytes);
  const double decode_us = MicrosSince(start, Clock::now());
  ExtractionResult result = ExtractTimed(img, cfg, start);
  result.timings.decode_us = decode_us;
  return result;
}

RasterImage PatchImage(const ScoredPatch& patch) {
  return RasterImage(patch.size, patch.size, patch.pixels);
}

RasterImage PrepareNbcPatch(const ScoredPatch& patch, const PipelineConfig& cfg) {
  return Resize(PatchImage(patch), cfg.output_width, cfg.output_height, cfg.patch_filter);
}

}  // namespace lota
