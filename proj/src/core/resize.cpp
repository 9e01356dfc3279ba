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

#include "core/resize.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <vector>

#include "core/error.hpp"

namespace lota {

namespace {

// Source index whose centre is nearest to the centre of destination index d.
std::vector<int> NearestMap(int src, int dst) {
  std::vector<int> map(dst);
  for (int d = 0; d < dst; ++d) {
    const int64_t s = (2 * static_cast<int64_t>(d) + 1) * src / (2 * static_cast<int64_t>(dst));
    map[d] = static_cast<int>(std::min<int64_t>(s, src - 1));
  }
  return map;
}

RasterImage ResizeNearest(const RasterImage& img, int width, int height) {
  const std::vector<int> xs = NearestMap(img.width(), width);
  const std::vector<int> ys = NearestMap(img.height(), height);
  RasterImage out(width, height);
  for (int y = 0; y < height; ++y) {
    const uint8_t* src = img.row(ys[y]);
    uint8_t* dst = out.row(y);
    if (y > 0 && ys[y] == ys[y - 1]) {
      std::memcpy(dst, out.row(y - 1), static_cast<size_t>(width) * kChannels);
      continue;
    }
    for (int x = 0; x < width; ++x) {
      const uint8_t* s = src + xs[x] * kChannels;
      dst[x * kChannels + 0] = s[0];
      dst[x * kChannels + 1] = s[1];
      dst[x * kChannels + 2] = s[2];
    }
  }
  return out;
}

struct Tap {
  int lo;
  int hi;
  double frac;
};

std::vector<Tap> LinearTaps(int src, int dst) {
  std::vector<Tap> taps(dst);
  const double scale = static_cast<double>(src) / dst;
  for (int d = 0; d < dst; ++d) {
    double s = (d + 0.5) * scale - 0.5;
    s = std::clamp(s, 0.0, static_cast<double>(src - 1));
    const int lo = static_cast<int>(std::floor(s));
    taps[d] = {lo, std::min(lo + 1, src - 1), s - lo};
  }
  return taps;
}

RasterImage ResizeBilinear(const RasterImage& img, int width, int height) {
  const std::vector<Tap> xt = LinearTaps(img.width(), width);
  const std::vector<Tap> yt = LinearTaps(img.height(), height);
  RasterImage out(width, height);
  for (int y = 0; y < height; ++y) {
    const uint8_t* r0 = img.row(yt[y].lo);
    const uint8_t* r1 = img.row(yt[y].hi);
    const double fy = yt[y].frac;
    uint8_t* dst = out.row(y);
    for (int x = 0; x < width; ++x) {
      const Tap& t = xt[x];
      for (int c = 0; c < kChannels; ++c) {
        const double top = r0[t.lo * kChannels + c] * (1.0 - t.frac) +
                           r0[t.hi * kChannels + c] * t.frac;
        const double bottom = r1[t.lo * kChannels + c] * (1.0 - t.frac) +
                              r1[t.hi * kChannels + c] * t.frac;
        const double v = top * (1.0 - fy) + bottom * fy;
        dst[x * kChannels + c] =
            static_cast<uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
      }
    }
  }
  return out;
}

}  // namespace

RasterImage Resize(const RasterImage& img, int width, int height, ResizeFilter filter) {
  if (width < 1 || height < 1) throw ParameterError("resize target must be positive");
  if (width == img.width() && height == img.height()) return img;
  return filter == ResizeFilter::kNearest ? ResizeNearest(img, width, height)
                                          : ResizeBilinear(img, width, height);
}

}  // namespace lota
