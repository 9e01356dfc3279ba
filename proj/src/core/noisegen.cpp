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

#include "core/noisegen.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

namespace lota {

NoiseImage ScaleMinMax(const LowBitImage& low) {
  const size_t n = static_cast<size_t>(low.width) * low.height;
  std::array<uint8_t, kChannels> lo;
  std::array<uint8_t, kChannels> hi;
  lo.fill(255);
  hi.fill(0);
  for (size_t i = 0; i < n; ++i) {
    for (int c = 0; c < kChannels; ++c) {
      const uint8_t v = low.values[i * kChannels + c];
      lo[c] = std::min(lo[c], v);
      hi[c] = std::max(hi[c], v);
    }
  }

  // Low-bit values fit in a byte, so one 256-entry table per channel suffices.
  // round(255 * (v - lo) / span) half-up == floor((510 * (v - lo) + span) / (2 * span)).
  std::array<std::array<uint8_t, 256>, kChannels> lut{};
  for (int c = 0; c < kChannels; ++c) {
    const uint32_t span = hi[c] - lo[c];
    if (span == 0) continue;
    for (uint32_t v = lo[c]; v <= hi[c]; ++v) {
      lut[c][v] = static_cast<uint8_t>((510u * (v - lo[c]) + span) / (2u * span));
    }
  }

  std::vector<uint8_t> out(n * kChannels);
  for (size_t i = 0; i < n; ++i) {
    for (int c = 0; c < kChannels; ++c) {
      out[i * kChannels + c] = lut[c][low.values[i * kChannels + c]];
    }
  }
  return {RasterImage(low.width, low.height, std::move(out)), NormMode::kScale};
}

NoiseImage ThresholdBinary(const LowBitImage& low) {
  std::vector<uint8_t> out(low.values.size());
  std::transform(low.values.begin(), low.values.end(), out.begin(),
                 [](uint8_t v) -> uint8_t { return v ? 255 : 0; });
  return {RasterImage(low.width, low.height, std::move(out)), NormMode::kThreshold};
}

NoiseImage Normalize(const LowBitImage& low, NormMode mode) {
  return mode == NormMode::kScale ? ScaleMinMax(low) : ThresholdBinary(low);
}

}  // namespace lota
