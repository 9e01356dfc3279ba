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

#include "core/image.hpp"

#include <string>

#include "core/error.hpp"

namespace lota {

namespace {

void CheckDimensions(int width, int height) {
  if (width < 1 || height < 1) {
    throw ParameterError("image dimensions must be positive, got " +
                         std::to_string(width) + "x" + std::to_string(height));
  }
}

}  // namespace

RasterImage::RasterImage(int width, int height) : width_(width), height_(height) {
  CheckDimensions(width, height);
  pixels_.assign(pixel_count() * kChannels, 0);
}

RasterImage::RasterImage(int width, int height, std::vector<uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  CheckDimensions(width, height);
  if (pixels_.size() != pixel_count() * kChannels) {
    throw ParameterError("pixel buffer holds " + std::to_string(pixels_.size()) +
                         " bytes, expected " +
                         std::to_string(pixel_count() * kChannels));
  }
}

}  // namespace lota
