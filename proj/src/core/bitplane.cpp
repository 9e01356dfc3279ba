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

#include "core/bitplane.hpp"

#include <cstring>
#include <string>

#include "core/error.hpp"

namespace lota {

namespace {

// Transposes an 8x8 bit matrix held row-per-byte: on return, bit i of byte k
// equals bit k of byte i of the input.
inline uint64_t Transpose8x8(uint64_t x) {
  uint64_t t = (x ^ (x >> 7)) & 0x00AA00AA00AA00AAULL;
  x = x ^ t ^ (t << 7);
  t = (x ^ (x >> 14)) & 0x0000CCCC0000CCCCULL;
  x = x ^ t ^ (t << 14);
  t = (x ^ (x >> 28)) & 0x00000000F0F0F0F0ULL;
  x = x ^ t ^ (t << 28);
  return x;
}

}  // namespace

BitPlaneStack::BitPlaneStack(int width, int height)
    : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    throw ParameterError("bit-plane stack dimensions must be positive");
  }
  bytes_per_plane_ = (static_cast<size_t>(width) * height + 7) / 8;
  plane_stride_ = (bytes_per_plane_ + 63) / 64 * 64 + 64;
  bits_.assign(plane_stride_ * kBitPlanes * kChannels, 0);
}

uint8_t BitPlaneStack::plane(int k, int channel, int row, int col) const {
  const size_t i = static_cast<size_t>(row) * width_ + col;
  return (packed(k, channel)[i >> 3] >> (i & 7)) & 1u;
}

void BitPlaneStack::set_plane(int k, int channel, int row, int col, uint8_t bit) {
  const size_t i = static_cast<size_t>(row) * width_ + col;
  uint8_t& byte = packed(k, channel)[i >> 3];
  const uint8_t mask = static_cast<uint8_t>(1u << (i & 7));
  byte = bit ? (byte | mask) : (byte & ~mask);
}

BitPlaneStack Decompose(const RasterImage& img) {
  BitPlaneStack stack(img.width(), img.height());
  const size_t n = img.pixel_count();
  const uint8_t* src = img.pixels().data();
  uint8_t* planes[kChannels][kBitPlanes];
  for (int c = 0; c < kChannels; ++c) {
    for (int k = 0; k < kBitPlanes; ++k) planes[c][k] = stack.packed(k, c);
  }

  const size_t full_groups = n / 8;
  for (size_t group = 0; group <= full_groups; ++group) {
    const size_t base = group * 8;
    if (base >= n) break;
    uint8_t px[8 * kChannels] = {};
    const size_t count = group < full_groups ? 8 : n - base;
    std::memcpy(px, src + base * kChannels, count * kChannels);
    uint64_t rows[kChannels] = {0, 0, 0};
    for (int i = 0; i < 8; ++i) {
      for (int c = 0; c < kChannels; ++c) {
        rows[c] |= static_cast<uint64_t>(px[i * kChannels + c]) << (8 * i);
      }
    }
    for (int c = 0; c < kChannels; ++c) {
      const uint64_t t = Transpose8x8(rows[c]);
      for (int k = 0; k < kBitPlanes; ++k) {
        planes[c][k][group] = static_cast<uint8_t>(t >> (8 * k));
      }
    }
  }
  return stack;
}

LowBitImage ComposeLowBits(const BitPlaneStack& stack, int plane_count) {
  if (plane_count < 1 || plane_count > kBitPlanes) {
    throw ParameterError("plane count must be in 1..8, got " +
                         std::to_string(plane_count));
  }
  LowBitImage low;
  low.width = stack.width();
  low.height = stack.height();
  low.plane_count = plane_count;
  const size_t n = static_cast<size_t>(low.width) * low.height;
  low.values.resize(n * kChannels);

  for (int c = 0; c < kChannels; ++c) {
    const uint8_t* planes[kBitPlanes];
    for (int k = 0; k < plane_count; ++k) planes[k] = stack.packed(k, c);
    for (size_t base = 0, group = 0; base < n; base += 8, ++group) {
      uint64_t t = 0;
      for (int k = 0; k < plane_count; ++k) {
        t |= static_cast<uint64_t>(planes[k][group]) << (8 * k);
      }
      const uint64_t rows = Transpose8x8(t);
      const size_t count = n - base < 8 ? n - base : 8;
      uint8_t* out = low.values.data() + base * kChannels + c;
      for (size_t i = 0; i < count; ++i) {
        out[i * kChannels] = static_cast<uint8_t>(rows >> (8 * i));
      }
    }
  }
  return low;
}

RasterImage RecomposeFull(const BitPlaneStack& stack) {
  LowBitImage all = ComposeLowBits(stack, kBitPlanes);
  return RasterImage(all.width, all.height, std::move(all.values));
}

}  // namespace lota
