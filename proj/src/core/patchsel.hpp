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

#ifndef LOTA_CORE_PATCHSEL_HPP_
#define LOTA_CORE_PATCHSEL_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "core/image.hpp"
#include "core/noisegen.hpp"

namespace lota {

inline constexpr int kDefaultPatchSize = 32;

// Small integer correlation kernel, at most 2x2, row-major taps.
struct GradientKernel {
  int rows;
  int cols;
  std::array<int, 4> taps;

  constexpr int tap(int r, int c) const { return taps[r * cols + c]; }
};

// Horizontal [-1 1], its transpose, and the two diagonal differences.
inline constexpr GradientKernel kGradX{1, 2, {-1, 1, 0, 0}};
inline constexpr GradientKernel kGradY{2, 1, {-1, 1, 0, 0}};
inline constexpr GradientKernel kGradXY{2, 2, {-1, 0, 0, 1}};
inline constexpr GradientKernel kGradYX{2, 2, {0, -1, 1, 0}};
inline constexpr std::array<GradientKernel, 4> kGradientKernels = {kGradX, kGradY,
                                                                   kGradXY, kGradYX};

struct ScoredPatch {
  int row_index = 0;  // grid row
  int col_index = 0;  // grid column
  int origin_x = 0;   // pixel column of the top-left corner
  int origin_y = 0;   // pixel row of the top-left corner
  int size = 0;
  std::vector<uint8_t> pixels;  // size x size x 3, interleaved
  std::optional<uint64_t> score;
};

// Sum of |response| over the valid region of a correlation of one kernel
// with every channel of a size x size interleaved block whose rows are
// row_stride bytes apart.
uint64_t KernelL1(const uint8_t* block, int size, size_t row_stride,
                  const GradientKernel& kernel);

// Sum of the four kernel L1 responses over all channels.
uint64_t GradientScore(const uint8_t* block, int size, size_t row_stride);
uint64_t GradientScore(const ScoredPatch& patch);

// Regular floor(W/P) x floor(H/P) grid of non-overlapping patches in
// row-major grid order. Remainder pixels on the right and bottom are dropped.
std::vector<ScoredPatch> Partition(const RasterImage& noise, int patch_size);
inline std::vector<ScoredPatch> Partition(const NoiseImage& noise, int patch_size) {
  return Partition(noise.pixels, patch_size);
}

void ScoreAll(std::span<ScoredPatch> patches);

enum class Strategy { kMax, kMin, kRandom };

struct Selection {
  Strategy strategy = Strategy::kMax;
  uint64_t seed = 0;
};

// Index of the highest score; ties go to the smallest (row, col).
size_t SelectMaxIndex(std::span<const ScoredPatch> patches);
size_t SelectIndex(std::span<const ScoredPatch> patches, const Selection& selection);

ScoredPatch SelectMax(std::span<const ScoredPatch> patches);
ScoredPatch SelectStrategy(std::span<const ScoredPatch> patches,
                           const Selection& selection);

}  // namespace lota

#endif  // LOTA_CORE_PATCHSEL_HPP_
