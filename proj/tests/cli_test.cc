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

// Command-line front end: dataset ingestion, manifests, ablation, bench,
// metrics and degrade, plus exit codes of the built binary.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "dataset.hpp"
#include "gtest/gtest.h"
#include "handles.hpp"
#include "manifest.hpp"
#include "options.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace lota_cli {
namespace {

std::vector<uint8_t> RandomPixels(int w, int h, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<uint8_t> px(static_cast<size_t>(w) * h * 3);
  for (uint8_t& v : px) v = static_cast<uint8_t>(rng());
  return px;
}

void WritePng(const fs::path& path, int w, int h, const std::vector<uint8_t>& px) {
  fs::create_directories(path.parent_path());
  lota_image* img = nullptr;
  ASSERT_EQ(lota_image_create(w, h, px.data(), &img), LOTA_OK);
  ImagePtr holder(img);
  ASSERT_EQ(lota_image_save_png(img, path.c_str()), LOTA_OK) << lota_last_error();
}

void WriteFile(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream(path, std::ios::binary) << text;
}

const ordered_json& RecordFor(const ordered_json& manifest, const std::string& source) {
  for (const auto& r : manifest["records"]) {
    if (r["source"] == source) return r;
  }
  throw std::runtime_error("no record for " + source);
}

ordered_json ReadJson(const fs::path& path) {
  std::ifstream in(path);
  return ordered_json::parse(in);
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    root_ = fs::temp_directory_path() /
            ("lota_cli_" + std::string(info->test_suite_name()) + "_" + info->name());
    fs::remove_all(root_);
    data_ = root_ / "data";
    WritePng(data_ / "sdv/train/ai/a.png", 256, 256, RandomPixels(256, 256, 1));
    WritePng(data_ / "sdv/train/nature/b.png", 300, 200, RandomPixels(300, 200, 2));
    WritePng(data_ / "sdv/val/ai/c.png", 256, 256, RandomPixels(256, 256, 3));
    WritePng(data_ / "midj/nature/d.png", 512, 512, RandomPixels(512, 512, 4));
  }
  void TearDown() override { fs::remove_all(root_); }

  void AddCorrupt() { WriteFile(data_ / "broken.png", "this is not a png"); }

  fs::path root_;
  fs::path data_;
  std::ostringstream log_;
};

TEST(DatasetTest, LabelsFromDirectoryNames) {
  DatasetEntry e;
  e.relative = "sdv/train/ai/x.png";
  InferLabelFromPath(e);
  EXPECT_EQ(e.fake, true);
  EXPECT_EQ(e.generator, "sdv");
  EXPECT_EQ(e.split, "train");

  DatasetEntry f;
  f.relative = "midj/nature/y.png";
  InferLabelFromPath(f);
  EXPECT_EQ(f.fake, false);
  EXPECT_EQ(f.generator, "midj");
  EXPECT_EQ(f.split, "");

  DatasetEntry g;
  g.relative = "loose/z.png";
  InferLabelFromPath(g);
  EXPECT_FALSE(g.fake.has_value());
}

TEST(DatasetTest, SplitCsvHandlesQuotes) {
  EXPECT_EQ(SplitCsvLine("a,b,c"), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(SplitCsvLine("\"x,y\",\"say \"\"hi\"\"\",z"),
            (std::vector<std::string>{"x,y", "say \"hi\"", "z"}));
  EXPECT_EQ(SplitCsvLine("a,,"), (std::vector<std::string>{"a", "", ""}));
}

TEST(DatasetTest, ParseLabelSynonyms) {
  for (const char* t : {"fake", "ai", "1", "FAKE"}) EXPECT_EQ(ParseLabel(t), true) << t;
  for (const char* t : {"real", "nature", "0"}) EXPECT_EQ(ParseLabel(t), false) << t;
  EXPECT_FALSE(ParseLabel("maybe").has_value());
}

TEST_F(CliTest, ScanFindsImagesSorted) {
  WriteFile(data_ / "notes.txt", "ignored");
  const auto entries = ScanDataset(data_);
  ASSERT_EQ(entries.size(), 4u);
  EXPECT_EQ(entries[0].relative, "midj/nature/d.png");
  EXPECT_EQ(entries[3].relative, "sdv/val/ai/c.png");
  EXPECT_THROW(ScanDataset(root_ / "missing"), CliError);
}

TEST_F(CliTest, LabelCsvOverridesPaths) {
  WriteFile(root_ / "labels.csv", "path,label,generator\nsdv/train/ai/a.png,real,other\n");
  auto entries = ScanDataset(data_);
  ApplyLabels(entries, LoadLabelCsv(root_ / "labels.csv"));
  for (const auto& e : entries) {
    if (e.relative == "sdv/train/ai/a.png") {
      EXPECT_EQ(e.fake, false);
      EXPECT_EQ(e.generator, "other");
    }
  }
  WriteFile(root_ / "bad.csv", "path,label\nx.png,perhaps\n");
  EXPECT_THROW(LoadLabelCsv(root_ / "bad.csv"), CliError);
}

TEST_F(CliTest, ExtractWritesManifestAndPatches) {
  ExtractOptions opts;
  opts.emit_nbc = true;
  const auto outcome = RunExtract(data_, root_ / "out", opts, log_);
  EXPECT_EQ(outcome.exit_code, kExitOk);
  const ordered_json m = ReadJson(root_ / "out/manifest.json");
  EXPECT_EQ(m, outcome.manifest);
  EXPECT_EQ(m["schema"], kManifestSchema);
  EXPECT_EQ(m["config_hash"].get<std::string>().size(), 16u);
  ASSERT_EQ(m["records"].size(), 4u);
  for (const auto& r : m["records"]) {
    EXPECT_EQ(r["status"], "ok");
    EXPECT_EQ(r["patch"]["size"], 32);
    EXPECT_EQ(r["patch"]["grid_rows"], 8);
    EXPECT_TRUE(fs::exists(root_ / "out" / r["output"].get<std::string>()));
    EXPECT_TRUE(fs::exists(root_ / "out" / r["nbc_output"].get<std::string>()));
    EXPECT_GE(r["timings_us"]["total"].get<double>(),
              r["timings_us"]["error_extraction"].get<double>());
  }
  const auto& a = RecordFor(m, "sdv/train/ai/a.png");
  EXPECT_EQ(a["label"], "fake");
  EXPECT_EQ(a["generator"], "sdv");
  EXPECT_EQ(a["split"], "train");

  lota_image* patch = nullptr;
  ASSERT_EQ(lota_image_load((root_ / "out/patches/sdv/train/ai/a.png").c_str(), &patch), LOTA_OK);
  ImagePtr holder(patch);
  EXPECT_EQ(lota_image_width(patch), 32);
  lota_image* nbc = nullptr;
  ASSERT_EQ(lota_image_load((root_ / "out/nbc/sdv/train/ai/a.png").c_str(), &nbc), LOTA_OK);
  ImagePtr nbc_holder(nbc);
  EXPECT_EQ(lota_image_width(nbc), 256);
}

// Threshold noise of a 256x256 image needs no resize, so the grid scores
// can be recomputed straight from pixels.
std::vector<uint64_t> OracleGrid(const std::vector<uint8_t>& px) {
  std::vector<uint64_t> scores;
  for (int gr = 0; gr < 8; ++gr) {
    for (int gc = 0; gc < 8; ++gc) {
      std::vector<uint8_t> block(32 * 32 * 3);
      for (int y = 0; y < 32; ++y) {
        for (int x = 0; x < 32; ++x) {
          for (int c = 0; c < 3; ++c) {
            const uint8_t v = px[((gr * 32 + y) * 256 + gc * 32 + x) * 3 + c];
            block[(y * 32 + x) * 3 + c] = (v & 7) ? 255 : 0;
          }
        }
      }
      scores.push_back(lota::testing::BruteForceGradientScore(block, 32));
    }
  }
  return scores;
}

TEST_F(CliTest, ExtractSelectionMatchesOracle) {
  const auto px = RandomPixels(256, 256, 1);
  const auto oracle = OracleGrid(px);
  const size_t best = std::max_element(oracle.begin(), oracle.end()) - oracle.begin();
  const auto outcome = RunExtract(data_, root_ / "out", ExtractOptions{}, log_);
  const auto& a = RecordFor(outcome.manifest, "sdv/train/ai/a.png");
  EXPECT_EQ(a["patch"]["row"].get<size_t>() * 8 + a["patch"]["col"].get<size_t>(), best);
  EXPECT_EQ(a["score"].get<uint64_t>(), oracle[best]);
}

TEST_F(CliTest, ExtractIsDeterministicApartFromTimings) {
  ExtractOptions opts;
  opts.strategy = "random";
  opts.seed = 99;
  opts.jobs = 3;
  auto strip = [](ordered_json m) {
    for (auto& r : m["records"]) r.erase("timings_us");
    m["summary"].erase("timings_us");
    return m;
  };
  const auto a = RunExtract(data_, root_ / "a", opts, log_).manifest;
  opts.jobs = 1;
  const auto b = RunExtract(data_, root_ / "b", opts, log_).manifest;
  EXPECT_EQ(strip(a), strip(b));
}

TEST_F(CliTest, CorruptFileBecomesErrorRecord) {
  AddCorrupt();
  const auto outcome = RunExtract(data_, root_ / "out", ExtractOptions{}, log_);
  EXPECT_EQ(outcome.exit_code, kExitPartial);
  const auto& m = outcome.manifest;
  ASSERT_EQ(m["records"].size(), 5u);
  EXPECT_EQ(m["summary"]["errors"], 1);
  EXPECT_EQ(m["summary"]["ok"], 4);
  const auto& broken = m["records"][0];
  EXPECT_EQ(broken["source"], "broken.png");
  EXPECT_EQ(broken["status"], "error");
  EXPECT_FALSE(broken["error"].get<std::string>().empty());
  EXPECT_TRUE(broken["output"].is_null());
  EXPECT_NE(log_.str().find("broken.png"), std::string::npos);
}

TEST_F(CliTest, SummaryMatchesReaggregation) {
  AddCorrupt();
  const auto m = RunExtract(data_, root_ / "out", ExtractOptions{}, log_).manifest;
  std::map<std::string, int> labels;
  std::map<std::string, std::map<std::string, int>> gens;
  std::map<std::string, std::vector<double>> stages;
  int ok = 0;
  for (const auto& r : m["records"]) {
    const std::string label = r["label"].is_null() ? "unknown" : r["label"].get<std::string>();
    ++labels[label];
    if (!r["generator"].is_null()) ++gens[r["generator"].get<std::string>()][label];
    if (r["status"] != "ok") continue;
    ++ok;
    for (const auto& [k, v] : r["timings_us"].items()) stages[k].push_back(v.get<double>());
  }
  const auto& s = m["summary"];
  EXPECT_EQ(s["records"], m["records"].size());
  EXPECT_EQ(s["ok"], ok);
  EXPECT_EQ(s["labels"]["fake"], labels["fake"]);
  EXPECT_EQ(s["labels"]["real"], labels["real"]);
  EXPECT_EQ(s["labels"]["unknown"], labels["unknown"]);
  EXPECT_EQ(s["generators"]["sdv"]["fake"], gens["sdv"]["fake"]);
  EXPECT_EQ(s["generators"]["midj"]["real"], gens["midj"]["real"]);
  for (auto& [stage, v] : stages) {
    double sum = 0;
    for (double x : v) sum += x;
    std::sort(v.begin(), v.end());
    const double median = v.size() % 2 ? v[v.size() / 2]
                                       : (v[v.size() / 2 - 1] + v[v.size() / 2]) / 2;
    EXPECT_NEAR(s["timings_us"][stage]["mean"].get<double>(), sum / v.size(), 1e-6) << stage;
    EXPECT_NEAR(s["timings_us"][stage]["median"].get<double>(), median, 1e-6) << stage;
  }
}

TEST_F(CliTest, ExtractRejectsBadInputs) {
  EXPECT_THROW(RunExtract(root_ / "missing", root_ / "out", ExtractOptions{}, log_), CliError);
  ExtractOptions bad;
  bad.planes = 0;
  EXPECT_THROW(RunExtract(data_, root_ / "out", bad, log_), CliError);
  bad = {};
  bad.norm = "sigmoid";
  EXPECT_THROW(RunExtract(data_, root_ / "out", bad, log_), CliError);
}

TEST_F(CliTest, BenchWritesCsv) {
  std::vector<StageStats> stats;
  ASSERT_EQ(RunBench(data_, 3, ExtractOptions{}, root_ / "bench.csv", log_, &stats), kExitOk);
  ASSERT_EQ(stats.size(), 7u);
  EXPECT_EQ(stats[5].stage, "error_extraction");
  EXPECT_EQ(stats[5].samples, 8u);
  EXPECT_NE(log_.str().find("vs reference 1.52 ms"), std::string::npos);
  std::ifstream in(root_ / "bench.csv");
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "stage,samples,mean_ms,median_ms,p95_ms");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 7);
}

TEST_F(CliTest, BenchSingleIterationIsWarmupOnly) {
  std::vector<StageStats> stats;
  ASSERT_EQ(RunBench(data_, 1, ExtractOptions{}, root_ / "bench.csv", log_, &stats), kExitOk);
  EXPECT_EQ(stats[5].samples, 0u);
  EXPECT_NE(log_.str().find("warm-up"), std::string::npos);
  EXPECT_THROW(RunBench(data_, 0, ExtractOptions{}, "", log_), CliError);
}

TEST(SummarizeTest, MeanMedianAndNearestRankP95) {
  std::vector<double> v;
  for (int i = 1; i <= 20; ++i) v.push_back(i);
  const StageStats s = Summarize("x", v);
  EXPECT_DOUBLE_EQ(s.mean_ms, 10.5);
  EXPECT_DOUBLE_EQ(s.median_ms, 10.5);
  EXPECT_DOUBLE_EQ(s.p95_ms, 19.0);
}

TEST_F(CliTest, AblationPatchSize) {
  ASSERT_EQ(RunAblation(data_, root_ / "abl", "patch_size", {"16", "32"}, ExtractOptions{}, log_),
            kExitOk);
  const auto m16 = ReadJson(root_ / "abl/patch_size-16/manifest.json");
  const auto m32 = ReadJson(root_ / "abl/patch_size-32/manifest.json");
  EXPECT_NE(m16["config_hash"], m32["config_hash"]);
  EXPECT_EQ(m16["records"][0]["patch"]["grid_rows"], 16);
  std::ifstream in(root_ / "abl/ablation.csv");
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "axis,value,dir,config_hash,records,errors,mean_score");
}

TEST_F(CliTest, AblationPlaneCountOne) {
  ASSERT_EQ(RunAblation(data_, root_ / "abl", "plane_count", {"1"}, ExtractOptions{}, log_),
            kExitOk);
  const auto m = ReadJson(root_ / "abl/plane_count-1/manifest.json");
  EXPECT_EQ(m["config"]["planes"], 1);
}

TEST_F(CliTest, AblationStrategiesAgreeWithOracle) {
  ASSERT_EQ(RunAblation(data_, root_ / "abl", "strategy", {"max", "min", "random:7"},
                        ExtractOptions{}, log_),
            kExitOk);
  const auto oracle = OracleGrid(RandomPixels(256, 256, 1));
  const size_t best = std::max_element(oracle.begin(), oracle.end()) - oracle.begin();
  const size_t worst = std::min_element(oracle.begin(), oracle.end()) - oracle.begin();
  auto picked = [&](const std::string& dir) {
    const auto m = ReadJson(root_ / "abl" / dir / "manifest.json");
    const auto& r = RecordFor(m, "sdv/train/ai/a.png");
    return r["patch"]["row"].get<size_t>() * 8 + r["patch"]["col"].get<size_t>();
  };
  EXPECT_EQ(picked("strategy-max"), best);
  EXPECT_EQ(picked("strategy-min"), worst);
  EXPECT_NE(picked("strategy-max"), picked("strategy-min"));
  const auto rnd = ReadJson(root_ / "abl/strategy-random-7/manifest.json");
  EXPECT_EQ(rnd["config"]["seed"], 7);
}

TEST_F(CliTest, AblationRejectsIllegalValuesBeforeWork) {
  EXPECT_THROW(RunAblation(data_, root_ / "abl", "patch_size", {"32", "24"}, {}, log_), CliError);
  EXPECT_THROW(RunAblation(data_, root_ / "abl", "plane_count", {"7"}, {}, log_), CliError);
  EXPECT_THROW(RunAblation(data_, root_ / "abl", "strategy", {"best"}, {}, log_), CliError);
  EXPECT_THROW(RunAblation(data_, root_ / "abl", "colour", {"1"}, {}, log_), CliError);
  EXPECT_FALSE(fs::exists(root_ / "abl"));
}

TEST_F(CliTest, MetricsFromScoreFile) {
  WriteFile(root_ / "scores.csv",
            "path,prob_fake,label,generator\n"
            "a.png,0.9,fake,g1\nb.png,0.4,fake,g1\nc.png,0.6,real,g2\nd.png,0.1,real,g2\n");
  const MetricsReport r = RunMetrics(root_ / "scores.csv", 0.5, log_);
  EXPECT_EQ(r.samples, 4u);
  EXPECT_NEAR(r.accuracy, 0.5, 1e-9);
  EXPECT_NEAR(r.average_precision, 5.0 / 6.0, 1e-9);
  EXPECT_NE(log_.str().find("single class"), std::string::npos);
}

TEST_F(CliTest, MetricsRejectsBadFiles) {
  WriteFile(root_ / "empty.csv", "");
  EXPECT_THROW(RunMetrics(root_ / "empty.csv", 0.5, log_), CliError);
  WriteFile(root_ / "header.csv", "prob_fake,label\n");
  EXPECT_THROW(RunMetrics(root_ / "header.csv", 0.5, log_), CliError);
  WriteFile(root_ / "range.csv", "prob_fake,label\n1.5,fake\n");
  EXPECT_THROW(RunMetrics(root_ / "range.csv", 0.5, log_), CliError);
  WriteFile(root_ / "cols.csv", "score,truth\n0.5,1\n");
  EXPECT_THROW(RunMetrics(root_ / "cols.csv", 0.5, log_), CliError);
  EXPECT_THROW(RunMetrics(root_ / "nope.csv", 0.5, log_), CliError);
}

TEST_F(CliTest, DegradeDirectory) {
  ASSERT_EQ(RunDegrade(data_, root_ / "deg", 1.0, 85, log_), kExitOk);
  lota_image* img = nullptr;
  ASSERT_EQ(lota_image_load((root_ / "deg/sdv/train/nature/b.png").c_str(), &img), LOTA_OK);
  ImagePtr holder(img);
  EXPECT_EQ(lota_image_width(img), 300);
  EXPECT_EQ(lota_image_height(img), 200);
  EXPECT_THROW(RunDegrade(data_, root_ / "deg", 0.0, 150, log_), CliError);
  EXPECT_THROW(RunDegrade(root_ / "missing", root_ / "deg", 0.0, 50, log_), CliError);
}

TEST(ImageSeedTest, DependsOnPathAndSeed) {
  EXPECT_EQ(ImageSeed(1, "a.png"), ImageSeed(1, "a.png"));
  EXPECT_NE(ImageSeed(1, "a.png"), ImageSeed(1, "b.png"));
  EXPECT_NE(ImageSeed(1, "a.png"), ImageSeed(2, "a.png"));
}

TEST(EffectiveJobsTest, RespectsEnvironmentCap) {
  setenv("LOTA_THREADS", "2", 1);
  EXPECT_EQ(EffectiveJobs(8), 2);
  EXPECT_EQ(EffectiveJobs(1), 1);
  unsetenv("LOTA_THREADS");
  EXPECT_EQ(EffectiveJobs(5), 5);
  EXPECT_GE(EffectiveJobs(0), 1);
}

int RunBinary(const std::string& args) {
  const std::string cmd = std::string(LOTA_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

TEST_F(CliTest, BinaryExitCodes) {
  const std::string data = data_.string();
  const std::string out = (root_ / "out").string();
  EXPECT_EQ(RunBinary("extract " + data + " --out " + out), 0);
  EXPECT_TRUE(fs::exists(root_ / "out/manifest.json"));
  EXPECT_EQ(RunBinary("extract " + data + " --out " + out + " --planes 9"), 1);
  EXPECT_EQ(RunBinary("extract " + (root_ / "missing").string() + " --out " + out), 1);
  EXPECT_EQ(RunBinary("frobnicate"), 1);
  EXPECT_EQ(RunBinary("ablate " + data + " --out " + out + " --axis patch_size --values 24"), 1);
  AddCorrupt();
  EXPECT_EQ(RunBinary("extract " + data + " --out " + out), 2);
  EXPECT_EQ(RunBinary("--help"), 0);
}

}  // namespace
}  // namespace lota_cli
