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

#include "core/codec.hpp"

#include <csetjmp>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include <png.h>

extern "C" {
#include <jpeglib.h>
}

#include "core/error.hpp"

namespace lota {

namespace {

// ---------------------------------------------------------------------------
// PNG

struct PngReadSource {
  const uint8_t* data;
  size_t size;
  size_t offset;
};

void PngReadCallback(png_structp png, png_bytep out, png_size_t length) {
  auto* src = static_cast<PngReadSource*>(png_get_io_ptr(png));
  if (src->offset + length > src->size) png_error(png, "truncated PNG stream");
  std::memcpy(out, src->data + src->offset, length);
  src->offset += length;
}

void PngWriteCallback(png_structp png, png_bytep data, png_size_t length) {
  auto* out = static_cast<std::vector<uint8_t>*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + length);
}

void PngFlushCallback(png_structp) {}

struct PngErrorState {
  char message[200];
};

void PngErrorCallback(png_structp png, png_const_charp msg) {
  auto* state = static_cast<PngErrorState*>(png_get_error_ptr(png));
  std::snprintf(state->message, sizeof(state->message), "%s", msg);
  png_longjmp(png, 1);
}

void PngWarningCallback(png_structp, png_const_charp) {}

// Decodes into *pixels; returns false with err->message set on failure.
// Only trivially destructible locals live between setjmp and longjmp.
bool DecodePngInto(std::span<const uint8_t> bytes, std::vector<uint8_t>* pixels,
                   int* width, int* height, PngErrorState* err) {
  PngReadSource src{bytes.data(), bytes.size(), 0};
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, err,
                                           PngErrorCallback, PngWarningCallback);
  if (!png) {
    std::snprintf(err->message, sizeof(err->message), "png_create_read_struct failed");
    return false;
  }
  png_infop info = png_create_info_struct(png);
  png_bytep* volatile rows = nullptr;
  if (!info || setjmp(png_jmpbuf(png))) {
    if (!info) std::snprintf(err->message, sizeof(err->message), "out of memory");
    delete[] rows;
    png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    return false;
  }
  png_set_read_fn(png, &src, PngReadCallback);
  png_read_info(png, info);

  const png_byte color_type = png_get_color_type(png, info);
  png_set_expand(png);
  png_set_strip_16(png);
  png_set_strip_alpha(png);
  if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
    png_set_gray_to_rgb(png);
  }
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  const png_uint_32 w = png_get_image_width(png, info);
  const png_uint_32 h = png_get_image_height(png, info);
  if (png_get_rowbytes(png, info) != static_cast<size_t>(w) * kChannels) {
    png_error(png, "unexpected row layout after transforms");
  }
  pixels->resize(static_cast<size_t>(w) * h * kChannels);
  rows = new png_bytep[h];
  for (png_uint_32 y = 0; y < h; ++y) {
    rows[y] = pixels->data() + static_cast<size_t>(y) * w * kChannels;
  }
  png_read_image(png, rows);
  png_read_end(png, nullptr);
  delete[] rows;
  png_destroy_read_struct(&png, &info, nullptr);
  *width = static_cast<int>(w);
  *height = static_cast<int>(h);
  return true;
}

bool EncodePngInto(const RasterImage& img, std::vector<uint8_t>* out, PngErrorState* err) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, err,
                                            PngErrorCallback, PngWarningCallback);
  if (!png) {
    std::snprintf(err->message, sizeof(err->message), "png_create_write_struct failed");
    return false;
  }
  png_infop info = png_create_info_struct(png);
  if (!info || setjmp(png_jmpbuf(png))) {
    if (!info) std::snprintf(err->message, sizeof(err->message), "out of memory");
    png_destroy_write_struct(&png, info ? &info : nullptr);
    return false;
  }
  png_set_write_fn(png, out, PngWriteCallback, PngFlushCallback);
  png_set_IHDR(png, info, img.width(), img.height(), 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < img.height(); ++y) {
    png_write_row(png, const_cast<png_bytep>(img.row(y)));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return true;
}

// ---------------------------------------------------------------------------
// JPEG

struct JpegError {
  jpeg_error_mgr mgr;
  jmp_buf jump;
  char message[JMSG_LENGTH_MAX];
  unsigned char* out_buf;  // owned by the encoder path, malloc'd by libjpeg
  unsigned long out_size;
};

void JpegErrorExit(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegError*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, err->message);
  std::longjmp(err->jump, 1);
}

void JpegSilence(j_common_ptr, int) {}

bool DecodeJpegInto(std::span<const uint8_t> bytes, std::vector<uint8_t>* pixels,
                    int* width, int* height, JpegError* err) {
  jpeg_decompress_struct cinfo;
  cinfo.err = jpeg_std_error(&err->mgr);
  err->mgr.error_exit = JpegErrorExit;
  err->mgr.emit_message = JpegSilence;
  if (setjmp(err->jump)) {
    jpeg_destroy_decompress(&cinfo);
    return false;
  }
  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
  jpeg_read_header(&cinfo, TRUE);
  if (cinfo.jpeg_color_space == JCS_CMYK || cinfo.jpeg_color_space == JCS_YCCK) {
    std::snprintf(err->message, sizeof(err->message), "CMYK JPEG is not supported");
    jpeg_destroy_decompress(&cinfo);
    return false;
  }
  cinfo.out_color_space = JCS_RGB;
  cinfo.dct_method = JDCT_ISLOW;
  jpeg_start_decompress(&cinfo);
  const size_t stride = static_cast<size_t>(cinfo.output_width) * kChannels;
  pixels->resize(stride * cinfo.output_height);
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = pixels->data() + stride * cinfo.output_scanline;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  *width = static_cast<int>(cinfo.output_width);
  *height = static_cast<int>(cinfo.output_height);
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return true;
}

bool EncodeJpegInto(const RasterImage& img, int quality, std::vector<uint8_t>* out,
                    JpegError* err) {
  jpeg_compress_struct cinfo;
  cinfo.err = jpeg_std_error(&err->mgr);
  err->mgr.error_exit = JpegErrorExit;
  err->mgr.emit_message = JpegSilence;
  err->out_buf = nullptr;
  err->out_size = 0;
  if (setjmp(err->jump)) {
    jpeg_destroy_compress(&cinfo);
    std::free(err->out_buf);
    err->out_buf = nullptr;
    return false;
  }
  jpeg_create_compress(&cinfo);
  jpeg_mem_dest(&cinfo, &err->out_buf, &err->out_size);
  cinfo.image_width = static_cast<JDIMENSION>(img.width());
  cinfo.image_height = static_cast<JDIMENSION>(img.height());
  cinfo.input_components = kChannels;
  cinfo.in_color_space = JCS_RGB;
  jpeg_set_defaults(&cinfo);
  cinfo.dct_method = JDCT_ISLOW;
  jpeg_set_quality(&cinfo, quality, TRUE);
  jpeg_start_compress(&cinfo, TRUE);
  while (cinfo.next_scanline < cinfo.image_height) {
    JSAMPROW row = const_cast<JSAMPROW>(img.row(static_cast<int>(cinfo.next_scanline)));
    jpeg_write_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_compress(&cinfo);
  out->assign(err->out_buf, err->out_buf + err->out_size);
  jpeg_destroy_compress(&cinfo);
  std::free(err->out_buf);
  err->out_buf = nullptr;
  return true;
}

}  // namespace

FileFormat SniffFormat(std::span<const uint8_t> bytes) {
  static constexpr uint8_t kPngMagic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  if (bytes.size() >= 8 && std::memcmp(bytes.data(), kPngMagic, 8) == 0) {
    return FileFormat::kPng;
  }
  if (bytes.size() >= 3 && bytes[0] == 0xFF && bytes[1] == 0xD8 && bytes[2] == 0xFF) {
    return FileFormat::kJpeg;
  }
  return FileFormat::kUnknown;
}

RasterImage DecodeImage(std::span<const uint8_t> bytes) {
  std::vector<uint8_t> pixels;
  int width = 0;
  int height = 0;
  switch (SniffFormat(bytes)) {
    case FileFormat::kPng: {
      PngErrorState err{};
      if (!DecodePngInto(bytes, &pixels, &width, &height, &err)) {
        throw DecodeError(std::string("PNG decode failed: ") + err.message);
      }
      break;
    }
    case FileFormat::kJpeg: {
      JpegError err{};
      if (!DecodeJpegInto(bytes, &pixels, &width, &height, &err)) {
        throw DecodeError(std::string("JPEG decode failed: ") + err.message);
      }
      break;
    }
    case FileFormat::kUnknown:
      throw DecodeError("unrecognized image format (expected PNG or JPEG)");
  }
  if (width < 1 || height < 1) throw DecodeError("decoded image is empty");
  return RasterImage(width, height, std::move(pixels));
}

std::vector<uint8_t> EncodePng(const RasterImage& img) {
  std::vector<uint8_t> out;
  PngErrorState err{};
  if (!EncodePngInto(img, &out, &err)) {
    throw EncodeError(std::string("PNG encode failed: ") + err.message);
  }
  return out;
}

std::vector<uint8_t> EncodeJpeg(const RasterImage& img, int quality) {
  if (quality < 1 || quality > 100) {
    throw ParameterError("JPEG quality must be in 1..100, got " + std::to_string(quality));
  }
  std::vector<uint8_t> out;
  JpegError err{};
  if (!EncodeJpegInto(img, quality, &out, &err)) {
    throw EncodeError(std::string("JPEG encode failed: ") + err.message);
  }
  return out;
}

std::vector<uint8_t> ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DecodeError("cannot open " + path.string());
  return std::vector<uint8_t>(std::istreambuf_iterator<char>(in),
                              std::istreambuf_iterator<char>());
}

void WriteFileBytes(const std::filesystem::path& path, std::span<const uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw EncodeError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw EncodeError("write failed for " + path.string());
}

RasterImage LoadImage(const std::filesystem::path& path) {
  return DecodeImage(ReadFileBytes(path));
}

void SavePng(const RasterImage& img, const std::filesystem::path& path) {
  WriteFileBytes(path, EncodePng(img));
}

}  // namespace lota
