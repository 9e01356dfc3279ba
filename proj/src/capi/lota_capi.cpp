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

#include "lota/lota.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "core/codec.hpp"
#include "core/degrade.hpp"
#include "core/error.hpp"
#include "core/metrics.hpp"
#include "core/pipeline.hpp"

struct lota_image {
  lota::RasterImage image;
};

struct lota_config {
  lota::PipelineConfig config;
  std::string description;
};

struct lota_result {
  lota::ExtractionResult result;
  lota::PipelineConfig config;
};

namespace {

thread_local std::string g_last_error;

lota_status Fail(lota_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
lota_status Guard(Fn&& fn) {
  try {
    fn();
    return LOTA_OK;
  } catch (const lota::ParameterError& e) {
    return Fail(LOTA_ERR_INVALID_ARGUMENT, e.what());
  } catch (const lota::DecodeError& e) {
    return Fail(LOTA_ERR_DECODE, e.what());
  } catch (const lota::EncodeError& e) {
    return Fail(LOTA_ERR_ENCODE, e.what());
  } catch (const lota::DegradeError& e) {
    return Fail(LOTA_ERR_DEGRADE, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(LOTA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(LOTA_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(LOTA_ERR_INTERNAL, "unknown error");
  }
}

lota_status NullArgument(const char* name) {
  return Fail(LOTA_ERR_INVALID_ARGUMENT, std::string(name) + " must not be null");
}

#define LOTA_REQUIRE(ptr)                   \
  do {                                      \
    if ((ptr) == nullptr) return NullArgument(#ptr); \
  } while (0)

lota::ResizeFilter ToFilter(lota_resize_filter f) {
  switch (f) {
    case LOTA_FILTER_NEAREST: return lota::ResizeFilter::kNearest;
    case LOTA_FILTER_BILINEAR: return lota::ResizeFilter::kBilinear;
  }
  throw lota::ParameterError("unknown resize filter");
}

std::vector<lota::ScoreEntry> ToEntries(const double* prob, const uint8_t* labels,
                                        size_t count) {
  std::vector<lota::ScoreEntry> entries(count);
  for (size_t i = 0; i < count; ++i) {
    if (labels[i] > 1) throw lota::ParameterError("labels must be 0 or 1");
    entries[i] = {prob[i], labels[i] == 1};
  }
  return entries;
}

}  // namespace

extern "C" {

const char* lota_version(void) { return "1.0.0"; }

const char* lota_status_string(lota_status status) {
  switch (status) {
    case LOTA_OK: return "ok";
    case LOTA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LOTA_ERR_DECODE: return "decode error";
    case LOTA_ERR_ENCODE: return "encode error";
    case LOTA_ERR_DEGRADE: return "degradation error";
    case LOTA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lota_last_error(void) { return g_last_error.c_str(); }

lota_status lota_image_create(int32_t width, int32_t height, const uint8_t* rgb,
                              lota_image** out) {
  LOTA_REQUIRE(rgb);
  LOTA_REQUIRE(out);
  return Guard([&] {
    if (width < 1 || height < 1) throw lota::ParameterError("image dimensions must be positive");
    const size_t n = static_cast<size_t>(width) * height * lota::kChannels;
    *out = new lota_image{lota::RasterImage(width, height, std::vector<uint8_t>(rgb, rgb + n))};
  });
}

lota_status lota_image_decode(const uint8_t* bytes, size_t size, lota_image** out) {
  LOTA_REQUIRE(bytes);
  LOTA_REQUIRE(out);
  return Guard([&] { *out = new lota_image{lota::DecodeImage({bytes, size})}; });
}

lota_status lota_image_load(const char* path, lota_image** out) {
  LOTA_REQUIRE(path);
  LOTA_REQUIRE(out);
  return Guard([&] { *out = new lota_image{lota::LoadImage(path)}; });
}

lota_status lota_image_save_png(const lota_image* image, const char* path) {
  LOTA_REQUIRE(image);
  LOTA_REQUIRE(path);
  return Guard([&] { lota::SavePng(image->image, path); });
}

void lota_image_destroy(lota_image* image) { delete image; }

int32_t lota_image_width(const lota_image* image) { return image ? image->image.width() : 0; }

int32_t lota_image_height(const lota_image* image) {
  return image ? image->image.height() : 0;
}

const uint8_t* lota_image_data(const lota_image* image) {
  return image ? image->image.pixels().data() : nullptr;
}

lota_status lota_degrade_gaussian(const lota_image* image, double sigma, lota_image** out) {
  LOTA_REQUIRE(image);
  LOTA_REQUIRE(out);
  return Guard([&] { *out = new lota_image{lota::GaussianBlur(image->image, sigma)}; });
}

lota_status lota_degrade_jpeg(const lota_image* image, int32_t quality, lota_image** out) {
  LOTA_REQUIRE(image);
  LOTA_REQUIRE(out);
  return Guard([&] { *out = new lota_image{lota::JpegRoundTrip(image->image, quality)}; });
}

lota_status lota_config_create(lota_config** out) {
  LOTA_REQUIRE(out);
  return Guard([&] { *out = new lota_config{}; });
}

lota_status lota_config_clone(const lota_config* config, lota_config** out) {
  LOTA_REQUIRE(config);
  LOTA_REQUIRE(out);
  return Guard([&] { *out = new lota_config{config->config, {}}; });
}

void lota_config_destroy(lota_config* config) { delete config; }

lota_status lota_config_set_planes(lota_config* config, int32_t planes) {
  LOTA_REQUIRE(config);
  config->config.plane_count = planes;
  return LOTA_OK;
}

lota_status lota_config_set_norm(lota_config* config, lota_norm_mode mode) {
  LOTA_REQUIRE(config);
  switch (mode) {
    case LOTA_NORM_THRESHOLD: config->config.norm = lota::NormMode::kThreshold; break;
    case LOTA_NORM_SCALE: config->config.norm = lota::NormMode::kScale; break;
    default: return Fail(LOTA_ERR_INVALID_ARGUMENT, "unknown normalization mode");
  }
  return LOTA_OK;
}

lota_status lota_config_set_patch_size(lota_config* config, int32_t patch_size) {
  LOTA_REQUIRE(config);
  config->config.patch_size = patch_size;
  return LOTA_OK;
}

lota_status lota_config_set_strategy(lota_config* config, lota_strategy strategy,
                                     uint64_t seed) {
  LOTA_REQUIRE(config);
  switch (strategy) {
    case LOTA_STRATEGY_MAX: config->config.selection.strategy = lota::Strategy::kMax; break;
    case LOTA_STRATEGY_MIN: config->config.selection.strategy = lota::Strategy::kMin; break;
    case LOTA_STRATEGY_RANDOM:
      config->config.selection.strategy = lota::Strategy::kRandom;
      break;
    default: return Fail(LOTA_ERR_INVALID_ARGUMENT, "unknown selection strategy");
  }
  config->config.selection.seed = seed;
  return LOTA_OK;
}

lota_status lota_config_set_working_size(lota_config* config, int32_t width, int32_t height) {
  LOTA_REQUIRE(config);
  config->config.working_width = width;
  config->config.working_height = height;
  return LOTA_OK;
}

lota_status lota_config_set_output_size(lota_config* config, int32_t width, int32_t height) {
  LOTA_REQUIRE(config);
  config->config.output_width = width;
  config->config.output_height = height;
  return LOTA_OK;
}

lota_status lota_config_set_noise_filter(lota_config* config, lota_resize_filter filter) {
  LOTA_REQUIRE(config);
  return Guard([&] { config->config.noise_filter = ToFilter(filter); });
}

lota_status lota_config_set_patch_filter(lota_config* config, lota_resize_filter filter) {
  LOTA_REQUIRE(config);
  return Guard([&] { config->config.patch_filter = ToFilter(filter); });
}

lota_status lota_config_set_blur_sigma(lota_config* config, double sigma) {
  LOTA_REQUIRE(config);
  config->config.blur_sigma = sigma;
  return LOTA_OK;
}

lota_status lota_config_set_jpeg_quality(lota_config* config, int32_t quality) {
  LOTA_REQUIRE(config);
  config->config.jpeg_quality = quality;
  return LOTA_OK;
}

lota_status lota_config_validate(const lota_config* config) {
  LOTA_REQUIRE(config);
  return Guard([&] { config->config.Validate(); });
}

lota_status lota_config_hash(const lota_config* config, char* buf, size_t size) {
  LOTA_REQUIRE(config);
  LOTA_REQUIRE(buf);
  if (size < 17) return Fail(LOTA_ERR_INVALID_ARGUMENT, "hash buffer needs 17 bytes");
  return Guard([&] {
    const std::string h = lota::ConfigHash(config->config);
    h.copy(buf, h.size());
    buf[h.size()] = '\0';
  });
}

const char* lota_config_describe(lota_config* config) {
  if (!config) return "";
  config->description = config->config.Canonical();
  return config->description.c_str();
}

lota_status lota_extract(const lota_image* image, const lota_config* config,
                         lota_result** out) {
  LOTA_REQUIRE(image);
  LOTA_REQUIRE(config);
  LOTA_REQUIRE(out);
  return Guard([&] {
    *out = new lota_result{lota::Extract(image->image, config->config), config->config};
  });
}

lota_status lota_extract_encoded(const uint8_t* bytes, size_t size, const lota_config* config,
                                 lota_result** out) {
  LOTA_REQUIRE(bytes);
  LOTA_REQUIRE(config);
  LOTA_REQUIRE(out);
  return Guard([&] {
    *out = new lota_result{lota::ExtractEncoded({bytes, size}, config->config),
                           config->config};
  });
}

void lota_result_destroy(lota_result* result) { delete result; }

lota_status lota_result_patch(const lota_result* result, lota_patch_info* out) {
  LOTA_REQUIRE(result);
  LOTA_REQUIRE(out);
  const lota::ScoredPatch& p = result->result.patch;
  *out = {p.row_index, p.col_index, p.origin_x, p.origin_y, p.size,
          result->result.grid_rows, result->result.grid_cols, p.score.value_or(0)};
  return LOTA_OK;
}

lota_status lota_result_timings(const lota_result* result, lota_timings* out) {
  LOTA_REQUIRE(result);
  LOTA_REQUIRE(out);
  const lota::StageTimings& t = result->result.timings;
  *out = {t.decode_us, t.degrade_us, t.noise_us, t.resize_us,
          t.scoring_us, t.error_extraction_us, t.total_us};
  return LOTA_OK;
}

size_t lota_result_grid_size(const lota_result* result) {
  return result ? result->result.grid_scores.size() : 0;
}

lota_status lota_result_grid_scores(const lota_result* result, uint64_t* scores,
                                    size_t count) {
  LOTA_REQUIRE(result);
  LOTA_REQUIRE(scores);
  const auto& grid = result->result.grid_scores;
  if (count < grid.size()) {
    return Fail(LOTA_ERR_INVALID_ARGUMENT, "score buffer too small for the patch grid");
  }
  std::copy(grid.begin(), grid.end(), scores);
  return LOTA_OK;
}

lota_status lota_result_patch_image(const lota_result* result, lota_image** out) {
  LOTA_REQUIRE(result);
  LOTA_REQUIRE(out);
  return Guard([&] { *out = new lota_image{lota::PatchImage(result->result.patch)}; });
}

lota_status lota_result_nbc_image(const lota_result* result, lota_image** out) {
  LOTA_REQUIRE(result);
  LOTA_REQUIRE(out);
  return Guard([&] {
    *out = new lota_image{lota::PrepareNbcPatch(result->result.patch, result->config)};
  });
}

lota_status lota_result_noise_image(const lota_result* result, lota_image** out) {
  LOTA_REQUIRE(result);
  LOTA_REQUIRE(out);
  return Guard([&] { *out = new lota_image{result->result.working_noise.pixels}; });
}

lota_status lota_compute_accuracy(const double* prob_fake, const uint8_t* labels,
                                  size_t count, double threshold, double* out) {
  LOTA_REQUIRE(out);
  if (count > 0) {
    LOTA_REQUIRE(prob_fake);
    LOTA_REQUIRE(labels);
  }
  return Guard([&] {
    const auto entries = count ? ToEntries(prob_fake, labels, count)
                               : std::vector<lota::ScoreEntry>{};
    *out = lota::ComputeAccuracy(entries, threshold);
  });
}

lota_status lota_compute_average_precision(const double* prob_fake, const uint8_t* labels,
                                           size_t count, double* out) {
  LOTA_REQUIRE(out);
  if (count > 0) {
    LOTA_REQUIRE(prob_fake);
    LOTA_REQUIRE(labels);
  }
  return Guard([&] {
    const auto entries = count ? ToEntries(prob_fake, labels, count)
                               : std::vector<lota::ScoreEntry>{};
    *out = lota::ComputeAveragePrecision(entries);
  });
}

}  // extern "C"
