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

// C interface to the LOTA low-bit noise extraction library.
//
// Every object is an opaque handle created by a lota_*_create / load call and
// released with the matching lota_*_destroy. Fallible calls return a
// lota_status; on failure lota_last_error() describes the most recent error
// raised on the calling thread. Handles are not internally synchronized:
// distinct handles may be used concurrently, one handle may not.

#ifndef LOTA_LOTA_H_
#define LOTA_LOTA_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(LOTA_BUILDING_LIBRARY)
#define LOTA_API __declspec(dllexport)
#else
#define LOTA_API __declspec(dllimport)
#endif
#else
#define LOTA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lota_status {
  LOTA_OK = 0,
  LOTA_ERR_INVALID_ARGUMENT = 1,  // bad parameter or null handle
  LOTA_ERR_DECODE = 2,            // unreadable or undecodable image
  LOTA_ERR_ENCODE = 3,            // image could not be encoded or written
  LOTA_ERR_DEGRADE = 4,           // blur / JPEG degradation failed
  LOTA_ERR_INTERNAL = 5
} lota_status;

typedef enum lota_norm_mode {
  LOTA_NORM_THRESHOLD = 0,
  LOTA_NORM_SCALE = 1
} lota_norm_mode;

typedef enum lota_strategy {
  LOTA_STRATEGY_MAX = 0,
  LOTA_STRATEGY_MIN = 1,
  LOTA_STRATEGY_RANDOM = 2
} lota_strategy;

typedef enum lota_resize_filter {
  LOTA_FILTER_NEAREST = 0,
  LOTA_FILTER_BILINEAR = 1
} lota_resize_filter;

typedef struct lota_image lota_image;
typedef struct lota_config lota_config;
typedef struct lota_result lota_result;

// Selected patch location and score.
typedef struct lota_patch_info {
  int32_t row_index;
  int32_t col_index;
  int32_t origin_x;
  int32_t origin_y;
  int32_t size;
  int32_t grid_rows;
  int32_t grid_cols;
  uint64_t score;
} lota_patch_info;

// Per-stage wall time in microseconds.
typedef struct lota_timings {
  double decode_us;
  double degrade_us;
  double noise_us;
  double resize_us;
  double scoring_us;
  double error_extraction_us;
  double total_us;
} lota_timings;

LOTA_API const char* lota_version(void);
LOTA_API const char* lota_status_string(lota_status status);
// Message for the last failure on this thread; empty string if none.
LOTA_API const char* lota_last_error(void);

// --- images ----------------------------------------------------------------

// Copies width*height*3 bytes of interleaved RGB.
LOTA_API lota_status lota_image_create(int32_t width, int32_t height, const uint8_t* rgb,
                                       lota_image** out);
LOTA_API lota_status lota_image_decode(const uint8_t* bytes, size_t size, lota_image** out);
LOTA_API lota_status lota_image_load(const char* path, lota_image** out);
LOTA_API lota_status lota_image_save_png(const lota_image* image, const char* path);
LOTA_API void lota_image_destroy(lota_image* image);

LOTA_API int32_t lota_image_width(const lota_image* image);
LOTA_API int32_t lota_image_height(const lota_image* image);
// Borrowed pointer to width*height*3 bytes, valid until the image is destroyed.
LOTA_API const uint8_t* lota_image_data(const lota_image* image);

LOTA_API lota_status lota_degrade_gaussian(const lota_image* image, double sigma,
                                           lota_image** out);
LOTA_API lota_status lota_degrade_jpeg(const lota_image* image, int32_t quality,
                                       lota_image** out);

// --- configuration ---------------------------------------------------------

// Defaults: 3 planes, thresholding, 256x256 working resolution, 32 px patches,
// max strategy, nearest-neighbor resizes, 256x256 output patch, no degradation.
LOTA_API lota_status lota_config_create(lota_config** out);
LOTA_API lota_status lota_config_clone(const lota_config* config, lota_config** out);
LOTA_API void lota_config_destroy(lota_config* config);

// Setters store values as given; lota_config_validate (and every extraction)
// reports out-of-range combinations.
LOTA_API lota_status lota_config_set_planes(lota_config* config, int32_t planes);
LOTA_API lota_status lota_config_set_norm(lota_config* config, lota_norm_mode mode);
LOTA_API lota_status lota_config_set_patch_size(lota_config* config, int32_t patch_size);
LOTA_API lota_status lota_config_set_strategy(lota_config* config, lota_strategy strategy,
                                              uint64_t seed);
LOTA_API lota_status lota_config_set_working_size(lota_config* config, int32_t width,
                                                  int32_t height);
LOTA_API lota_status lota_config_set_output_size(lota_config* config, int32_t width,
                                                 int32_t height);
LOTA_API lota_status lota_config_set_noise_filter(lota_config* config,
                                                  lota_resize_filter filter);
LOTA_API lota_status lota_config_set_patch_filter(lota_config* config,
                                                  lota_resize_filter filter);
LOTA_API lota_status lota_config_set_blur_sigma(lota_config* config, double sigma);
LOTA_API lota_status lota_config_set_jpeg_quality(lota_config* config, int32_t quality);
LOTA_API lota_status lota_config_validate(const lota_config* config);

// Writes the 16-hex-digit config hash plus terminator into buf (>= 17 bytes).
LOTA_API lota_status lota_config_hash(const lota_config* config, char* buf, size_t size);
// Borrowed canonical key=value description, valid until the next call on
// this config.
LOTA_API const char* lota_config_describe(lota_config* config);

// --- extraction ------------------------------------------------------------

LOTA_API lota_status lota_extract(const lota_image* image, const lota_config* config,
                                  lota_result** out);
// Decodes PNG/JPEG bytes then extracts; decode time is reported.
LOTA_API lota_status lota_extract_encoded(const uint8_t* bytes, size_t size,
                                          const lota_config* config, lota_result** out);
LOTA_API void lota_result_destroy(lota_result* result);

LOTA_API lota_status lota_result_patch(const lota_result* result, lota_patch_info* out);
LOTA_API lota_status lota_result_timings(const lota_result* result, lota_timings* out);
// Number of grid patches and their scores in row-major grid order.
LOTA_API size_t lota_result_grid_size(const lota_result* result);
LOTA_API lota_status lota_result_grid_scores(const lota_result* result, uint64_t* scores,
                                             size_t count);
// New images owned by the caller.
LOTA_API lota_status lota_result_patch_image(const lota_result* result, lota_image** out);
LOTA_API lota_status lota_result_nbc_image(const lota_result* result, lota_image** out);
LOTA_API lota_status lota_result_noise_image(const lota_result* result, lota_image** out);

// --- metrics ---------------------------------------------------------------

// labels: 1 = fake (positive), 0 = real.
LOTA_API lota_status lota_compute_accuracy(const double* prob_fake, const uint8_t* labels,
                                           size_t count, double threshold, double* out);
LOTA_API lota_status lota_compute_average_precision(const double* prob_fake,
                                                    const uint8_t* labels, size_t count,
                                                    double* out);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // LOTA_LOTA_H_
