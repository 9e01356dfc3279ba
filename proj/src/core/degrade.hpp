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

#ifndef LOTA_CORE_DEGRADE_HPP_
#define LOTA_CORE_DEGRADE_HPP_

#include <vector>

#include "core/image.hpp"

namespace lota {

// Normalized 1-D Gaussian taps for offsets -radius..radius, radius = ceil(3 sigma).
std::vector<double> GaussianTaps(double sigma);

// Maps any integer index onto [0, n) by mirror reflection about the outer
// pixel edges (... c b a | a b c ... x y z | z y x ...).
int ReflectIndex(int i, int n);

// Separable channel-wise Gaussian blur with reflected boundary. sigma == 0
// returns the input unchanged; negative sigma throws ParameterError.
RasterImage GaussianBlur(const RasterImage& img, double sigma);

// Encode-then-decode through baseline JPEG at quality 1..100.
RasterImage JpegRoundTrip(const RasterImage& img, int quality);

}  // namespace lota

#endif  // LOTA_CORE_DEGRADE_HPP_
