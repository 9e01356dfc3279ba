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

#include "core/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "core/error.hpp"

namespace lota {

namespace {

void CheckProbabilities(std::span<const ScoreEntry> scores) {
  for (const ScoreEntry& s : scores) {
    if (!(s.prob_fake >= 0.0 && s.prob_fake <= 1.0)) {
      throw ParameterError("probabilities must lie in [0, 1]");
    }
  }
}

}  // namespace

double ComputeAccuracy(std::span<const ScoreEntry> scores, double threshold) {
  if (scores.empty()) throw ParameterError("accuracy of an empty score set");
  CheckProbabilities(scores);
  size_t correct = 0;
  for (const ScoreEntry& s : scores) {
    if ((s.prob_fake >= threshold) == s.fake) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(scores.size());
}

double ComputeAveragePrecision(std::span<const ScoreEntry> scores) {
  CheckProbabilities(scores);
  const size_t positives = std::count_if(scores.begin(), scores.end(),
                                         [](const ScoreEntry& s) { return s.fake; });
  if (positives == 0 || positives == scores.size()) {
    throw ParameterError("average precision needs both fake and real samples");
  }

  std::vector<ScoreEntry> sorted(scores.begin(), scores.end());
  std::sort(sorted.begin(), sorted.end(), [](const ScoreEntry& a, const ScoreEntry& b) {
    return a.prob_fake > b.prob_fake;
  });

  double ap = 0.0;
  double prev_recall = 0.0;
  size_t tp = 0;
  size_t seen = 0;
  for (size_t i = 0; i < sorted.size();) {
    size_t j = i;
    while (j < sorted.size() && sorted[j].prob_fake == sorted[i].prob_fake) {
      if (sorted[j].fake) ++tp;
      ++j;
    }
    seen = j;
    const double recall = static_cast<double>(tp) / static_cast<double>(positives);
    const double precision = static_cast<double>(tp) / static_cast<double>(seen);
    ap += (recall - prev_recall) * precision;
    prev_recall = recall;
    i = j;
  }
  return ap;
}

}  // namespace lota
