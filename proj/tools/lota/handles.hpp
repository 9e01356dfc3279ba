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

#ifndef LOTA_TOOLS_HANDLES_HPP_
#define LOTA_TOOLS_HANDLES_HPP_

// RAII ownership for the C API handles.

#include <memory>
#include <stdexcept>
#include <string>

#include "lota/lota.h"

namespace lota_cli {

struct ImageDeleter {
  void operator()(lota_image* p) const { lota_image_destroy(p); }
};
struct ConfigDeleter {
  void operator()(lota_config* p) const { lota_config_destroy(p); }
};
struct ResultDeleter {
  void operator()(lota_result* p) const { lota_result_destroy(p); }
};

using ImagePtr = std::unique_ptr<lota_image, ImageDeleter>;
using ConfigPtr = std::unique_ptr<lota_config, ConfigDeleter>;
using ResultPtr = std::unique_ptr<lota_result, ResultDeleter>;

// A failed library call, carrying its status code.
class LibraryError : public std::runtime_error {
 public:
  LibraryError(lota_status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  lota_status status() const { return status_; }

 private:
  lota_status status_;
};

inline void Check(lota_status status) {
  if (status != LOTA_OK) {
    std::string msg = lota_last_error();
    if (msg.empty()) msg = lota_status_string(status);
    throw LibraryError(status, msg);
  }
}

inline ConfigPtr CloneConfig(const lota_config* cfg) {
  lota_config* out = nullptr;
  Check(lota_config_clone(cfg, &out));
  return ConfigPtr(out);
}

inline std::string ConfigHashOf(const lota_config* cfg) {
  char buf[17];
  Check(lota_config_hash(cfg, buf, sizeof(buf)));
  return buf;
}

}  // namespace lota_cli

#endif  // LOTA_TOOLS_HANDLES_HPP_
