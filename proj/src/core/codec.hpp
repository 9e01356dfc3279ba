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

#ifndef LOTA_CORE_CODEC_HPP_
#define LOTA_CORE_CODEC_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "core/image.hpp"

namespace lota {

enum class FileFormat { kUnknown, kPng, kJpeg };

FileFormat SniffFormat(std::span<const uint8_t> bytes);

// Decodes PNG or JPEG bytes to 8-bit RGB. Grayscale is replicated to three
// channels, alpha is dropped, palettes are expanded and 16-bit samples are
// truncated to their high byte. Throws DecodeError.
RasterImage DecodeImage(std::span<const uint8_t> bytes);

std::vector<uint8_t> EncodePng(const RasterImage& img);

// Baseline JPEG at the given quality (1..100), libjpeg default 4:2:0 chroma.
std::vector<uint8_t> EncodeJpeg(const RasterImage& img, int quality);

std::vector<uint8_t> ReadFileBytes(const std::filesystem::path& path);
void WriteFileBytes(const std::filesystem::path& path, std::span<const uint8_t> bytes);

RasterImage LoadImage(const std::filesystem::path& path);
void SavePng(const RasterImage& img, const std::filesystem::path& path);

}  // namespace lota

#endif  // LOTA_CORE_CODEC_HPP_
