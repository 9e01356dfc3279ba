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

#ifndef LOTA_CORE_BITPLANE_HPP_
#define LOTA_CORE_BITPLANE_HPP_

#include <cstdint>
#include <vector>

#include "core/image.hpp"

namespace lota {

inline constexpr int kBitPlanes = 8;
inline constexpr int kDefaultPlaneCount = 3;

// The eight binary planes of every channel of an RGB image. Plane 0 is the
// least significant bit. Planes are stored bit-packed, eight pixels per byte
// in row-major pixel order; element access always yields 0 or 1.
class BitPlaneStack {
 public:
  // All-zero stack.
  BitPlaneStack(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }

  uint8_t plane(int k, int channel, int row, int col) const;
  void set_plane(int k, int channel, int row, int col, uint8_t bit);

  // Packed bytes of one plane; bit (i % 8) of byte (i / 8) is pixel i.
  const uint8_t* packed(int k, int channel) const {
    return bits_.data() + offset(k, channel);
  }
  uint8_t* packed(int k, int channel) { return bits_.data() + offset(k, channel); }
  size_t bytes_per_plane() const { return bytes_per_plane_; }

 private:
  size_t offset(int k, int channel) const {
    return (static_cast<size_t>(channel) * kBitPlanes + k) * plane_stride_;
  }

  int width_;
  int height_;
  size_t bytes_per_plane_;
  // Padded so the 24 planes do not share cache sets when written together.
  size_t plane_stride_;
  std::vector<uint8_t> bits_;
};

// Per-channel composition of the m least significant planes; every value is
// below 2^m. Interleaved RGB, row-major.
struct LowBitImage {
  int width = 0;
  int height = 0;
  int plane_count = kDefaultPlaneCount;
  std::vector<uint8_t> values;

  uint8_t at(int row, int col, int channel) const {
    return values[(static_cast<size_t>(row) * width + col) * kChannels + channel];
  }
};

BitPlaneStack Decompose(const RasterImage& img);

// Sum over k < plane_count of 2^k * plane[k]. plane_count must be in 1..8.
LowBitImage ComposeLowBits(const BitPlaneStack& stack, int plane_count = kDefaultPlaneCount);

RasterImage RecomposeFull(const BitPlaneStack& stack);

}  // namespace lota

#endif  // LOTA_CORE_BITPLANE_HPP_
