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

#ifndef LOTA_CORE_ERROR_HPP_
#define LOTA_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace lota {

// Invalid argument or configuration value. Raised before any work is done.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Input bytes could not be decoded into an image.
class DecodeError : public std::runtime_error {
 public:
  explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

// Encoding or writing an image failed.
class EncodeError : public std::runtime_error {
 public:
  explicit EncodeError(const std::string& what) : std::runtime_error(what) {}
};

// A degradation operator (blur, JPEG round trip) failed.
class DegradeError : public std::runtime_error {
 public:
  explicit DegradeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lota

#endif  // LOTA_CORE_ERROR_HPP_
