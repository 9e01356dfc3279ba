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

#ifndef LOTA_CORE_NOISEGEN_HPP_
#define LOTA_CORE_NOISEGEN_HPP_

#include "core/bitplane.hpp"
#include "core/image.hpp"

namespace lota {

enum class NormMode { kThreshold, kScale };

// Normalized low-bit composite. In threshold mode every value is 0 or 255.
struct NoiseImage {
  RasterImage pixels;
  NormMode mode;

  int width() const { return pixels.width(); }
  int height() const { return pixels.height(); }
};

// Per-channel min-max stretch to [0, 255], rounded half-up. A channel whose
// min equals its max is emitted as zeros.
NoiseImage ScaleMinMax(const LowBitImage& low);

// 0 stays 0, anything positive becomes 255.
NoiseImage ThresholdBinary(const LowBitImage& low);

NoiseImage Normalize(const LowBitImage& low, NormMode mode);

}  // namespace lota

#endif  // LOTA_CORE_NOISEGEN_HPP_
