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

#ifndef LOTA_CORE_METRICS_HPP_
#define LOTA_CORE_METRICS_HPP_

#include <span>

namespace lota {

// One scored sample; fake is the positive class.
struct ScoreEntry {
  double prob_fake;
  bool fake;
};

// Fraction of samples with (prob_fake >= threshold) == fake.
double ComputeAccuracy(std::span<const ScoreEntry> scores, double threshold = 0.5);

// Step-wise average precision: sum over descending score thresholds of
// (R_n - R_{n-1}) * P_n, with equal scores forming a single threshold.
// Requires at least one sample of each class.
double ComputeAveragePrecision(std::span<const ScoreEntry> scores);

}  // namespace lota

#endif  // LOTA_CORE_METRICS_HPP_
