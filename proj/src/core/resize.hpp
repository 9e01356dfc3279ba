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

#ifndef LOTA_CORE_RESIZE_HPP_
#define LOTA_CORE_RESIZE_HPP_

#include "core/image.hpp"

namespace lota {

enum class ResizeFilter { kNearest, kBilinear };

// Both filters sample at pixel centres. Nearest-neighbor never introduces
// values absent from the source; with an integer upscale factor f every
// source pixel becomes an f x f block.
RasterImage Resize(const RasterImage& img, int width, int height, ResizeFilter filter);

}  // namespace lota

#endif  // LOTA_CORE_RESIZE_HPP_
