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

#include "core/degrade.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/codec.hpp"
#include "core/error.hpp"

namespace lota {

std::vector<double> GaussianTaps(double sigma) {
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> taps(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double w = std::exp(-(i * i) / (2.0 * sigma * sigma));
    taps[i + radius] = w;
    sum += w;
  }
  for (double& w : taps) w /= sum;
  return taps;
}

int ReflectIndex(int i, int n) {
  const int period = 2 * n;
  int m = i % period;
  if (m < 0) m += period;
  return m < n ? m : period - 1 - m;
}

RasterImage GaussianBlur(const RasterImage& img, double sigma) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw ParameterError("blur sigma must be a finite value >= 0, got " +
                         std::to_string(sigma));
  }
  if (sigma == 0.0) return img;

  const std::vector<double> taps = GaussianTaps(sigma);
  const int radius = static_cast<int>(taps.size() / 2);
  const int w = img.width();
  const int h = img.height();

  std::vector<int> xmap(w + 2 * radius);
  for (int i = 0; i < w + 2 * radius; ++i) xmap[i] = ReflectIndex(i - radius, w);
  std::vector<int> ymap(h + 2 * radius);
  for (int i = 0; i < h + 2 * radius; ++i) ymap[i] = ReflectIndex(i - radius, h);

  // Horizontal pass into a float buffer, then vertical pass with rounding.
  std::vector<double> tmp(img.pixel_count() * kChannels);
  for (int y = 0; y < h; ++y) {
    const uint8_t* src = img.row(y);
    double* dst = tmp.data() + static_cast<size_t>(y) * w * kChannels;
    for (int x = 0; x < w; ++x) {
      double acc[kChannels] = {0.0, 0.0, 0.0};
      for (int t = 0; t <= 2 * radius; ++t) {
        const uint8_t* s = src + xmap[x + t] * kChannels;
        for (int c = 0; c < kChannels; ++c) acc[c] += taps[t] * s[c];
      }
      for (int c = 0; c < kChannels; ++c) dst[x * kChannels + c] = acc[c];
    }
  }

  RasterImage out(w, h);
  const size_t stride = static_cast<size_t>(w) * kChannels;
  std::vector<double> acc(stride);
  for (int y = 0; y < h; ++y) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (int t = 0; t <= 2 * radius; ++t) {
      const double* s = tmp.data() + ymap[y + t] * stride;
      const double wt = taps[t];
      for (size_t i = 0; i < stride; ++i) acc[i] += wt * s[i];
    }
    uint8_t* dst = out.row(y);
    for (size_t i = 0; i < stride; ++i) {
      dst[i] = static_cast<uint8_t>(std::clamp(std::floor(acc[i] + 0.5), 0.0, 255.0));
    }
  }
  return out;
}

RasterImage JpegRoundTrip(const RasterImage& img, int quality) {
  if (quality < 1 || quality > 100) {
    throw ParameterError("JPEG quality must be in 1..100, got " + std::to_string(quality));
  }
  try {
    return DecodeImage(EncodeJpeg(img, quality));
  } catch (const EncodeError& e) {
    throw DegradeError(e.what());
  } catch (const DecodeError& e) {
    throw DegradeError(e.what());
  }
}

}  // namespace lota
