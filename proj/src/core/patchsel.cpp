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

#include "core/patchsel.hpp"

#include <cstdlib>
#include <limits>
#include <random>
#include <string>

#include "core/error.hpp"

namespace lota {

namespace {

// Valid-region correlation L1 for one kernel. Channels are interleaved, so a
// row of outputs is a contiguous run of (size - cols + 1) * 3 samples and the
// inner loop is a straight sum of absolute differences.
template <GradientKernel K>
uint64_t KernelL1Fixed(const uint8_t* block, int size, size_t row_stride) {
  const int out_rows = size - K.rows + 1;
  const int run = (size - K.cols + 1) * kChannels;
  uint64_t total = 0;
  for (int i = 0; i < out_rows; ++i) {
    const uint8_t* r0 = block + i * row_stride;
    const uint8_t* r1 = r0 + (K.rows > 1 ? row_stride : 0);
    uint32_t row_total = 0;
    for (int x = 0; x < run; ++x) {
      int response = K.tap(0, 0) * r0[x];
      if constexpr (K.cols > 1) response += K.tap(0, 1) * r0[x + kChannels];
      if constexpr (K.rows > 1) response += K.tap(1, 0) * r1[x];
      if constexpr (K.rows > 1 && K.cols > 1) response += K.tap(1, 1) * r1[x + kChannels];
      row_total += static_cast<uint32_t>(response < 0 ? -response : response);
    }
    total += row_total;
  }
  return total;
}

}  // namespace

uint64_t KernelL1(const uint8_t* block, int size, size_t row_stride,
                  const GradientKernel& kernel) {
  const int out_rows = size - kernel.rows + 1;
  const int out_cols = size - kernel.cols + 1;
  uint64_t total = 0;
  for (int i = 0; i < out_rows; ++i) {
    for (int j = 0; j < out_cols; ++j) {
      for (int c = 0; c < kChannels; ++c) {
        int response = 0;
        for (int a = 0; a < kernel.rows; ++a) {
          const uint8_t* src = block + (i + a) * row_stride + j * kChannels + c;
          for (int b = 0; b < kernel.cols; ++b) {
            response += kernel.tap(a, b) * src[b * kChannels];
          }
        }
        total += static_cast<uint64_t>(std::abs(response));
      }
    }
  }
  return total;
}

uint64_t GradientScore(const uint8_t* block, int size, size_t row_stride) {
  return KernelL1Fixed<kGradX>(block, size, row_stride) +
         KernelL1Fixed<kGradY>(block, size, row_stride) +
         KernelL1Fixed<kGradXY>(block, size, row_stride) +
         KernelL1Fixed<kGradYX>(block, size, row_stride);
}

uint64_t GradientScore(const ScoredPatch& patch) {
  return GradientScore(patch.pixels.data(), patch.size,
                       static_cast<size_t>(patch.size) * kChannels);
}

std::vector<ScoredPatch> Partition(const RasterImage& noise, int patch_size) {
  if (patch_size < 2) {
    throw ParameterError("patch size must be at least 2, got " +
                         std::to_string(patch_size));
  }
  if (patch_size > noise.width() || patch_size > noise.height()) {
    throw ParameterError("patch size " + std::to_string(patch_size) +
                         " exceeds image " + std::to_string(noise.width()) + "x" +
                         std::to_string(noise.height()));
  }
  const int grid_rows = noise.height() / patch_size;
  const int grid_cols = noise.width() / patch_size;
  const size_t patch_row_bytes = static_cast<size_t>(patch_size) * kChannels;

  std::vector<ScoredPatch> patches;
  patches.reserve(static_cast<size_t>(grid_rows) * grid_cols);
  for (int r = 0; r < grid_rows; ++r) {
    for (int c = 0; c < grid_cols; ++c) {
      ScoredPatch p;
      p.row_index = r;
      p.col_index = c;
      p.origin_x = c * patch_size;
      p.origin_y = r * patch_size;
      p.size = patch_size;
      p.pixels.resize(patch_row_bytes * patch_size);
      for (int y = 0; y < patch_size; ++y) {
        const uint8_t* src = noise.row(p.origin_y + y) + p.origin_x * kChannels;
        std::copy(src, src + patch_row_bytes, p.pixels.begin() + y * patch_row_bytes);
      }
      patches.push_back(std::move(p));
    }
  }
  return patches;
}

void ScoreAll(std::span<ScoredPatch> patches) {
  for (ScoredPatch& p : patches) p.score = GradientScore(p);
}

namespace {

void CheckSelectable(std::span<const ScoredPatch> patches) {
  if (patches.empty()) throw ParameterError("cannot select from an empty patch list");
  for (const ScoredPatch& p : patches) {
    if (!p.score) throw ParameterError("patch selection requires scored patches");
  }
}

// Grid order, used for tie-breaks.
bool GridBefore(const ScoredPatch& a, const ScoredPatch& b) {
  if (a.row_index != b.row_index) return a.row_index < b.row_index;
  return a.col_index < b.col_index;
}

template <typename Better>
size_t SelectExtreme(std::span<const ScoredPatch> patches, Better better) {
  CheckSelectable(patches);
  size_t best = 0;
  for (size_t i = 1; i < patches.size(); ++i) {
    const uint64_t s = *patches[i].score;
    const uint64_t b = *patches[best].score;
    if (better(s, b) || (s == b && GridBefore(patches[i], patches[best]))) best = i;
  }
  return best;
}

// Unbiased draw in [0, n) from a 64-bit engine.
size_t UniformIndex(std::mt19937_64& rng, size_t n) {
  const uint64_t bound = static_cast<uint64_t>(n);
  const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                         std::numeric_limits<uint64_t>::max() % bound;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<size_t>(x % bound);
}

}  // namespace

size_t SelectMaxIndex(std::span<const ScoredPatch> patches) {
  return SelectExtreme(patches, [](uint64_t a, uint64_t b) { return a > b; });
}

size_t SelectIndex(std::span<const ScoredPatch> patches, const Selection& selection) {
  switch (selection.strategy) {
    case Strategy::kMax:
      return SelectMaxIndex(patches);
    case Strategy::kMin:
      return SelectExtreme(patches, [](uint64_t a, uint64_t b) { return a < b; });
    case Strategy::kRandom: {
      CheckSelectable(patches);
      std::mt19937_64 rng(selection.seed);
      return UniformIndex(rng, patches.size());
    }
  }
  throw ParameterError("unknown selection strategy");
}

ScoredPatch SelectMax(std::span<const ScoredPatch> patches) {
  return patches[SelectMaxIndex(patches)];
}

ScoredPatch SelectStrategy(std::span<const ScoredPatch> patches,
                           const Selection& selection) {
  return patches[SelectIndex(patches, selection)];
}

}  // namespace lota
