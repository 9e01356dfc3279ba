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

#include "core/patchsel.hpp"

#include <random>
#include <set>

#include "core/error.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace lota {
namespace {

ScoredPatch MakePatch(int size, std::vector<uint8_t> px, int row = 0, int col = 0) {
  ScoredPatch p;
  p.size = size;
  p.row_index = row;
  p.col_index = col;
  p.pixels = std::move(px);
  return p;
}

// Single-channel (red) patch from a row-major grid; green and blue stay 0.
ScoredPatch RedPatch(int size, const std::vector<int>& red) {
  std::vector<uint8_t> px(static_cast<size_t>(size) * size * 3, 0);
  for (size_t i = 0; i < red.size(); ++i) px[i * 3] = static_cast<uint8_t>(red[i]);
  return MakePatch(size, px);
}

ScoredPatch RandomPatch(std::mt19937_64& rng, int size, int max_value = 255) {
  std::uniform_int_distribution<int> d(0, max_value);
  std::vector<uint8_t> px(static_cast<size_t>(size) * size * 3);
  for (uint8_t& v : px) v = static_cast<uint8_t>(d(rng));
  return MakePatch(size, px);
}

uint64_t KernelResponse(const ScoredPatch& p, const GradientKernel& k) {
  return KernelL1(p.pixels.data(), p.size, static_cast<size_t>(p.size) * 3, k);
}

TEST(GradientKernelTest, CoefficientsSumToZero) {
  for (const GradientKernel& k : kGradientKernels) {
    int sum = 0;
    for (int r = 0; r < k.rows; ++r) {
      for (int c = 0; c < k.cols; ++c) sum += k.tap(r, c);
    }
    EXPECT_EQ(sum, 0);
  }
}

TEST(GradientScoreTest, ConstantPatchScoresZero) {
  for (int v : {0, 1, 128, 255}) {
    ScoredPatch p = MakePatch(8, std::vector<uint8_t>(8 * 8 * 3, static_cast<uint8_t>(v)));
    EXPECT_EQ(GradientScore(p), 0u);
    for (const GradientKernel& k : kGradientKernels) EXPECT_EQ(KernelResponse(p, k), 0u);
  }
}

TEST(GradientScoreTest, TwoByTwoCorner) {
  const ScoredPatch p = RedPatch(2, {0, 255, 0, 0});
  EXPECT_EQ(testing::BruteForceGradientScore(p.pixels, 2), 765u);
  EXPECT_EQ(KernelResponse(p, kGradX), 255u);
  EXPECT_EQ(KernelResponse(p, kGradY), 255u);
  EXPECT_EQ(KernelResponse(p, kGradXY), 0u);
  EXPECT_EQ(KernelResponse(p, kGradYX), 255u);
  EXPECT_EQ(GradientScore(p), 765u);
}

TEST(GradientScoreTest, Checkerboard) {
  for (int size = 2; size <= 9; ++size) {
    std::vector<int> red(size * size);
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) red[i * size + j] = ((i + j) % 2) * 255;
    }
    const ScoredPatch p = RedPatch(size, red);
    const uint64_t expected = 2ull * 255 * size * (size - 1);
    EXPECT_EQ(testing::BruteForceGradientScore(p.pixels, size), expected);
    EXPECT_EQ(GradientScore(p), expected) << "size " << size;
    EXPECT_EQ(KernelResponse(p, kGradXY), 0u);
    EXPECT_EQ(KernelResponse(p, kGradYX), 0u);
  }
  EXPECT_EQ(GradientScore(RedPatch(2, {0, 255, 255, 0})), 1020u);
}

TEST(GradientScoreTest, MatchesBruteForceOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const ScoredPatch p = RandomPatch(rng, 2 + static_cast<int>(rng() % 40));
    ASSERT_EQ(GradientScore(p), testing::BruteForceGradientScore(p.pixels, p.size));
    uint64_t by_kernel = 0;
    for (const GradientKernel& k : kGradientKernels) by_kernel += KernelResponse(p, k);
    ASSERT_EQ(GradientScore(p), by_kernel);
  }
}

TEST(GradientScoreTest, HomogeneousInIntegerScale) {
  std::mt19937_64 rng(12);
  for (int c = 2; c <= 4; ++c) {
    const ScoredPatch p = RandomPatch(rng, 16, 255 / c);
    ScoredPatch scaled = p;
    for (uint8_t& v : scaled.pixels) v = static_cast<uint8_t>(v * c);
    EXPECT_EQ(GradientScore(scaled), c * GradientScore(p));
  }
}

TEST(GradientScoreTest, TransposeInvariantForSingleChannel) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int size = 2 + static_cast<int>(rng() % 12);
    std::vector<int> red(size * size);
    for (int& v : red) v = static_cast<int>(rng() % 256);
    std::vector<int> transposed(size * size);
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) transposed[j * size + i] = red[i * size + j];
    }
    EXPECT_EQ(GradientScore(RedPatch(size, red)), GradientScore(RedPatch(size, transposed)));
  }
}

TEST(PartitionTest, DefaultGeometry) {
  const std::vector<ScoredPatch> grid = Partition(RasterImage(256, 256), 32);
  ASSERT_EQ(grid.size(), 64u);
  for (size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(grid[i].row_index, static_cast<int>(i / 8));
    EXPECT_EQ(grid[i].col_index, static_cast<int>(i % 8));
    EXPECT_EQ(grid[i].origin_x, grid[i].col_index * 32);
    EXPECT_EQ(grid[i].origin_y, grid[i].row_index * 32);
    EXPECT_EQ(grid[i].size, 32);
    EXPECT_FALSE(grid[i].score.has_value());
  }
}

TEST(PartitionTest, SinglePatchAndRemainder) {
  EXPECT_EQ(Partition(RasterImage(64, 64), 64).size(), 1u);
  const auto grid = Partition(RasterImage(70, 70), 32);
  ASSERT_EQ(grid.size(), 4u);
  EXPECT_EQ(grid.back().origin_x + grid.back().size, 64);
  EXPECT_EQ(Partition(RasterImage(100, 40), 32).size(), 3u);
}

TEST(PartitionTest, CopiesPixelBlocks) {
  std::mt19937_64 rng(2);
  const RasterImage img = testing::RandomImage(rng, 20, 12);
  for (const ScoredPatch& p : Partition(img, 4)) {
    for (int y = 0; y < 4; ++y) {
      for (int x = 0; x < 4; ++x) {
        for (int c = 0; c < 3; ++c) {
          ASSERT_EQ(p.pixels[(y * 4 + x) * 3 + c], img.at(p.origin_y + y, p.origin_x + x, c));
        }
      }
    }
  }
}

TEST(PartitionTest, RejectsBadPatchSizes) {
  EXPECT_THROW(Partition(RasterImage(16, 16), 1), ParameterError);
  EXPECT_THROW(Partition(RasterImage(16, 40), 32), ParameterError);
  EXPECT_THROW(Partition(RasterImage(40, 16), 32), ParameterError);
}

std::vector<ScoredPatch> ScoredGrid(const RasterImage& img, int size) {
  std::vector<ScoredPatch> grid = Partition(img, size);
  ScoreAll(grid);
  return grid;
}

// Grid of 8x8 patches where patch `flat` is constant and the rest are noise.
RasterImage GridWithConstantPatch(std::mt19937_64& rng, int flat) {
  RasterImage img = testing::RandomImage(rng, 32, 32);
  const int oy = (flat / 4) * 8;
  const int ox = (flat % 4) * 8;
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) {
      for (int c = 0; c < 3; ++c) img.at(oy + y, ox + x, c) = 77;
    }
  }
  return img;
}

TEST(SelectTest, ConstantPatchLosesMaxAndWinsMin) {
  std::mt19937_64 rng(31);
  const auto grid = ScoredGrid(GridWithConstantPatch(rng, 5), 8);
  EXPECT_NE(SelectMaxIndex(grid), 5u);
  EXPECT_GT(*SelectMax(grid).score, 0u);
  const ScoredPatch min = SelectStrategy(grid, {Strategy::kMin, 0});
  EXPECT_EQ(min.row_index * 4 + min.col_index, 5);
  EXPECT_EQ(*min.score, 0u);
}

TEST(SelectTest, TiesGoToFirstGridIndex) {
  const auto grid = ScoredGrid(testing::ConstantImage(64, 64, 9, 9, 9), 16);
  const ScoredPatch max = SelectMax(grid);
  EXPECT_EQ(max.row_index, 0);
  EXPECT_EQ(max.col_index, 0);
  const ScoredPatch min = SelectStrategy(grid, {Strategy::kMin, 0});
  EXPECT_EQ(min.row_index, 0);
  EXPECT_EQ(min.col_index, 0);

  // Tie between two non-first patches, presented out of grid order.
  std::vector<ScoredPatch> shuffled = ScoredGrid(testing::ConstantImage(64, 64, 9, 9, 9), 16);
  shuffled[7].score = 50;
  shuffled[3].score = 50;
  std::swap(shuffled[0], shuffled[7]);
  const ScoredPatch picked = SelectMax(shuffled);
  EXPECT_EQ(picked.row_index * 4 + picked.col_index, 3);
}

TEST(SelectTest, MatchesExhaustiveArgmax) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 25; ++trial) {
    // 8x8 grid of independent random binary patches.
    RasterImage img(256, 256);
    for (uint8_t& v : img.pixels()) v = (rng() % 3 == 0) ? 255 : 0;
    const auto grid = ScoredGrid(img, 32);
    size_t best = 0;
    uint64_t best_score = 0;
    for (size_t i = 0; i < grid.size(); ++i) {
      std::vector<uint8_t> block(32 * 32 * 3);
      const int oy = static_cast<int>(i / 8) * 32, ox = static_cast<int>(i % 8) * 32;
      for (int y = 0; y < 32; ++y) {
        for (int x = 0; x < 32; ++x) {
          for (int c = 0; c < 3; ++c) block[(y * 32 + x) * 3 + c] = img.at(oy + y, ox + x, c);
        }
      }
      const uint64_t s = testing::BruteForceGradientScore(block, 32);
      if (i == 0 || s > best_score) {
        best = i;
        best_score = s;
      }
    }
    EXPECT_EQ(SelectMaxIndex(grid), best);
    EXPECT_EQ(SelectIndex(grid, {Strategy::kMax, 123}), best);
  }
}

TEST(SelectTest, ArgmaxInvariantUnderPositiveScaling) {
  std::mt19937_64 rng(45);
  for (int c = 2; c <= 4; ++c) {
    const RasterImage img = testing::RandomImage(rng, 48, 48, 255 / c);
    RasterImage scaled = img;
    for (uint8_t& v : scaled.pixels()) v = static_cast<uint8_t>(v * c);
    const auto a = ScoredGrid(img, 16);
    const auto b = ScoredGrid(scaled, 16);
    for (size_t i = 0; i < a.size(); ++i) EXPECT_EQ(*b[i].score, c * *a[i].score);
    EXPECT_EQ(SelectMaxIndex(a), SelectMaxIndex(b));
  }
}

TEST(SelectTest, RandomStrategyIsSeededAndCoversGrid) {
  std::mt19937_64 rng(46);
  const auto grid = ScoredGrid(testing::RandomImage(rng, 64, 64), 16);
  EXPECT_EQ(SelectIndex(grid, {Strategy::kRandom, 7}), SelectIndex(grid, {Strategy::kRandom, 7}));
  std::set<size_t> seen;
  for (uint64_t seed = 0; seed < 400; ++seed) {
    seen.insert(SelectIndex(grid, {Strategy::kRandom, seed}));
  }
  EXPECT_EQ(seen.size(), grid.size());
}

TEST(SelectTest, RejectsEmptyAndUnscored) {
  EXPECT_THROW(SelectMax({}), ParameterError);
  EXPECT_THROW(SelectStrategy({}, {Strategy::kRandom, 1}), ParameterError);
  const auto unscored = Partition(RasterImage(8, 8), 4);
  EXPECT_THROW(SelectMax(unscored), ParameterError);
}

}  // namespace
}  // namespace lota
