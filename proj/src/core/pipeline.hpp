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

#ifndef LOTA_CORE_PIPELINE_HPP_
#define LOTA_CORE_PIPELINE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/bitplane.hpp"
#include "core/image.hpp"
#include "core/noisegen.hpp"
#include "core/patchsel.hpp"
#include "core/resize.hpp"

namespace lota {

struct PipelineConfig {
  int plane_count = kDefaultPlaneCount;
  NormMode norm = NormMode::kThreshold;
  // The noise image is resized to this resolution before patch selection.
  int working_width = 256;
  int working_height = 256;
  int patch_size = kDefaultPatchSize;
  Selection selection;
  ResizeFilter noise_filter = ResizeFilter::kNearest;
  // Resolution and filter for the classifier-facing upsampled patch.
  int output_width = 256;
  int output_height = 256;
  ResizeFilter patch_filter = ResizeFilter::kNearest;
  // Optional degradation of the raw image ahead of extraction. Blur runs
  // first when both are set. jpeg_quality 0 disables the JPEG round trip.
  double blur_sigma = 0.0;
  int jpeg_quality = 0;

  // Throws ParameterError on the first invalid field.
  void Validate() const;

  // Stable key=value rendering of every field; input to ConfigHash.
  std::string Canonical() const;
};

// 16 lowercase hex digits (FNV-1a 64 of the canonical form).
std::string ConfigHash(const PipelineConfig& cfg);

const char* ToString(NormMode mode);
const char* ToString(Strategy strategy);
const char* ToString(ResizeFilter filter);

// Wall time per stage in microseconds. error_extraction covers noise
// generation, resize and scoring; total spans every stage including decode.
struct StageTimings {
  double decode_us = 0.0;
  double degrade_us = 0.0;
  double noise_us = 0.0;
  double resize_us = 0.0;
  double scoring_us = 0.0;
  double error_extraction_us = 0.0;
  double total_us = 0.0;
};

struct ExtractionResult {
  ScoredPatch patch;
  int grid_rows = 0;
  int grid_cols = 0;
  std::vector<uint64_t> grid_scores;  // row-major over the grid
  NoiseImage working_noise;           // at the working resolution
  StageTimings timings;
};

ExtractionResult Extract(const RasterImage& img, const PipelineConfig& cfg);

// Decodes then extracts; decode time lands in timings.decode_us.
ExtractionResult ExtractEncoded(std::span<const uint8_t> bytes, const PipelineConfig& cfg);

// Upsamples the selected patch to the configured output resolution.
RasterImage PrepareNbcPatch(const ScoredPatch& patch, const PipelineConfig& cfg);

// Raw P x P patch pixels as an image.
RasterImage PatchImage(const ScoredPatch& patch);

}  // namespace lota

#endif  // LOTA_CORE_PIPELINE_HPP_
