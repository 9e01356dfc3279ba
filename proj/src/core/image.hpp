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

#ifndef LOTA_CORE_IMAGE_HPP_
#define LOTA_CORE_IMAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lota {

inline constexpr int kChannels = 3;

// 8-bit interleaved RGB raster, row-major. Always non-empty.
class RasterImage {
 public:
  RasterImage(int width, int height);
  RasterImage(int width, int height, std::vector<uint8_t> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  size_t pixel_count() const { return static_cast<size_t>(width_) * height_; }

  uint8_t at(int row, int col, int channel) const {
    return pixels_[index(row, col, channel)];
  }
  uint8_t& at(int row, int col, int channel) {
    return pixels_[index(row, col, channel)];
  }

  std::span<const uint8_t> pixels() const { return pixels_; }
  std::span<uint8_t> pixels() { return pixels_; }
  const uint8_t* row(int r) const {
    return pixels_.data() + static_cast<size_t>(r) * width_ * kChannels;
  }
  uint8_t* row(int r) {
    return pixels_.data() + static_cast<size_t>(r) * width_ * kChannels;
  }

  bool operator==(const RasterImage&) const = default;

 private:
  size_t index(int row, int col, int channel) const {
    return (static_cast<size_t>(row) * width_ + col) * kChannels + channel;
  }

  int width_;
  int height_;
  std::vector<uint8_t> pixels_;
};

}  // namespace lota

#endif  // LOTA_CORE_IMAGE_HPP_
