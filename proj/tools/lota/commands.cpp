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

#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <mutex>
#include <thread>

#include "dataset.hpp"
#include "handles.hpp"
#include "manifest.hpp"

namespace fs = std::filesystem;

namespace lota_cli {

namespace {

std::vector<uint8_t> ReadBytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LibraryError(LOTA_ERR_DECODE, "cannot open " + path.string());
  return std::vector<uint8_t>(std::istreambuf_iterator<char>(in),
                              std::istreambuf_iterator<char>());
}

// foo.png stays foo.png; any other extension gains a .png suffix so that
// a.jpg and a.png in one folder cannot collide.
std::string PngName(const std::string& relative) {
  const fs::path p(relative);
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".png" ? relative : relative + ".png";
}

void EnsureWritableDir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw CliError("cannot create output directory " + dir.string());
  }
  const fs::path probe = dir / ".lota_write_probe";
  {
    std::ofstream f(probe);
    if (!f) throw CliError("output directory is not writable: " + dir.string());
  }
  fs::remove(probe, ec);
}

void SaveImage(const lota_image* img, const fs::path& path) {
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  Check(lota_image_save_png(img, path.string().c_str()));
}

ExtractionRecord ProcessEntry(const DatasetEntry& entry, const lota_config* base,
                              bool random_strategy, uint64_t seed, const fs::path& out_dir,
                              bool emit_nbc, const std::string& hash) {
  ExtractionRecord rec;
  rec.source = entry.relative;
  rec.fake = entry.fake;
  rec.generator = entry.generator;
  rec.split = entry.split;
  rec.config_hash = hash;
  try {
    ConfigPtr cfg = CloneConfig(base);
    if (random_strategy) {
      Check(lota_config_set_strategy(cfg.get(), LOTA_STRATEGY_RANDOM,
                                     ImageSeed(seed, entry.relative)));
    }
    const std::vector<uint8_t> bytes = ReadBytes(entry.path);
    lota_result* raw = nullptr;
    Check(lota_extract_encoded(bytes.data(), bytes.size(), cfg.get(), &raw));
    ResultPtr result(raw);
    Check(lota_result_patch(result.get(), &rec.patch));
    Check(lota_result_timings(result.get(), &rec.timings));

    lota_image* patch = nullptr;
    Check(lota_result_patch_image(result.get(), &patch));
    ImagePtr patch_img(patch);
    rec.output = "patches/" + PngName(entry.relative);
    SaveImage(patch_img.get(), out_dir / rec.output);
    if (emit_nbc) {
      lota_image* nbc = nullptr;
      Check(lota_result_nbc_image(result.get(), &nbc));
      ImagePtr nbc_img(nbc);
      rec.nbc_output = "nbc/" + PngName(entry.relative);
      SaveImage(nbc_img.get(), out_dir / rec.nbc_output);
    }
    rec.ok = true;
  } catch (const std::exception& e) {
    rec.ok = false;
    rec.error = e.what();
    rec.patch = {};
    rec.timings = {};
    rec.output.clear();
    rec.nbc_output.clear();
  }
  return rec;
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CliError("cannot write " + path.string());
  out << text;
}

std::string FormatMs(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

ExtractOutcome RunExtract(const fs::path& input_dir, const fs::path& out_dir,
                          const ExtractOptions& opts, std::ostream& log) {
  ConfigPtr cfg = BuildConfig(opts);
  const std::string hash = ConfigHashOf(cfg.get());
  std::vector<DatasetEntry> entries = ScanDataset(input_dir);
  if (!opts.labels_csv.empty()) ApplyLabels(entries, LoadLabelCsv(opts.labels_csv));
  EnsureWritableDir(out_dir);

  const bool random_strategy = opts.strategy == "random";
  std::vector<ExtractionRecord> records(entries.size());
  const int jobs = std::min<int>(EffectiveJobs(opts.jobs),
                                 std::max<int>(1, static_cast<int>(entries.size())));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < entries.size(); i = next++) {
      records[i] = ProcessEntry(entries[i], cfg.get(), random_strategy, opts.seed, out_dir,
                                opts.emit_nbc, hash);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  ExtractOutcome outcome;
  outcome.manifest = BuildManifest(ConfigToJson(opts), hash, records);
  WriteText(out_dir / "manifest.json", outcome.manifest.dump(2) + "\n");

  const size_t errors = outcome.manifest["summary"]["errors"].get<size_t>();
  log << "extracted " << (records.size() - errors) << "/" << records.size()
      << " images (config " << hash << ", " << jobs << " worker"
      << (jobs == 1 ? "" : "s") << ") -> " << (out_dir / "manifest.json").string() << "\n";
  for (const ExtractionRecord& r : records) {
    if (!r.ok) log << "  error: " << r.source << ": " << r.error << "\n";
  }
  outcome.exit_code = errors ? kExitPartial : kExitOk;
  return outcome;
}

StageStats Summarize(const std::string& stage, std::vector<double> samples_ms) {
  StageStats s;
  s.stage = stage;
  s.samples = samples_ms.size();
  if (samples_ms.empty()) return s;
  std::sort(samples_ms.begin(), samples_ms.end());
  double sum = 0.0;
  for (double v : samples_ms) sum += v;
  const size_t n = samples_ms.size();
  s.mean_ms = sum / static_cast<double>(n);
  s.median_ms = n % 2 ? samples_ms[n / 2] : 0.5 * (samples_ms[n / 2 - 1] + samples_ms[n / 2]);
  const size_t rank = static_cast<size_t>(std::ceil(0.95 * static_cast<double>(n)));
  s.p95_ms = samples_ms[std::max<size_t>(rank, 1) - 1];
  return s;
}

int RunBench(const fs::path& input_dir, int iterations, const ExtractOptions& opts,
             const fs::path& csv_path, std::ostream& log, std::vector<StageStats>* stats_out) {
  if (iterations < 1) throw CliError("--iterations must be at least 1");
  ConfigPtr cfg = BuildConfig(opts);
  const std::vector<DatasetEntry> entries = ScanDataset(input_dir);
  if (entries.empty()) throw CliError("no PNG or JPEG images under " + input_dir.string());

  std::vector<std::pair<std::string, std::vector<uint8_t>>> inputs;
  for (const DatasetEntry& e : entries) {
    try {
      inputs.emplace_back(e.relative, ReadBytes(e.path));
    } catch (const std::exception& ex) {
      log << "  skipping " << e.relative << ": " << ex.what() << "\n";
    }
  }

  std::vector<std::vector<double>> samples(7);
  size_t decodable = 0;
  for (int it = 0; it < iterations; ++it) {
    for (const auto& [name, bytes] : inputs) {
      lota_result* raw = nullptr;
      if (lota_extract_encoded(bytes.data(), bytes.size(), cfg.get(), &raw) != LOTA_OK) {
        if (it == 0) log << "  skipping " << name << ": " << lota_last_error() << "\n";
        continue;
      }
      ResultPtr result(raw);
      if (it == 0) {
        ++decodable;
        continue;
      }
      lota_timings t{};
      Check(lota_result_timings(result.get(), &t));
      for (int s = 0; s < 7; ++s) samples[s].push_back(StageValue(t, s) / 1000.0);
    }
  }
  if (decodable == 0) throw CliError("no decodable images under " + input_dir.string());

  std::vector<StageStats> stats;
  for (int s = 0; s < 7; ++s) stats.push_back(Summarize(kStageNames[s], samples[s]));

  std::string csv = "stage,samples,mean_ms,median_ms,p95_ms\n";
  log << "bench: " << decodable << " image(s) x " << iterations
      << " iteration(s), first iteration excluded as warm-up, single thread\n";
  if (iterations == 1) {
    log << "no warm iterations to report: the only iteration was the warm-up "
           "(use --iterations 2 or more)\n";
  } else {
    char line[160];
    std::snprintf(line, sizeof(line), "%-18s %8s %10s %10s %10s\n", "stage", "samples",
                  "mean_ms", "median_ms", "p95_ms");
    log << line;
    for (const StageStats& s : stats) {
      std::snprintf(line, sizeof(line), "%-18s %8zu %10.4f %10.4f %10.4f\n", s.stage.c_str(),
                    s.samples, s.mean_ms, s.median_ms, s.p95_ms);
      log << line;
      csv += s.stage + "," + std::to_string(s.samples) + "," + FormatMs(s.mean_ms) + "," +
             FormatMs(s.median_ms) + "," + FormatMs(s.p95_ms) + "\n";
    }
    const double median = stats[5].median_ms;
    std::snprintf(line, sizeof(line),
                  "error extraction median %.4f ms vs reference %.2f ms (%.2fx); "
                  "budget %.1f ms: %s\n",
                  median, kReferenceExtractionMs, median / kReferenceExtractionMs,
                  kExtractionBudgetMs, median <= kExtractionBudgetMs ? "within" : "EXCEEDED");
    log << line;
  }
  if (!csv_path.empty()) {
    std::error_code ec;
    if (csv_path.has_parent_path()) fs::create_directories(csv_path.parent_path(), ec);
    WriteText(csv_path, csv);
  }
  if (stats_out) *stats_out = stats;
  return kExitOk;
}

void ValidateAblation(const std::string& axis, const std::vector<std::string>& values) {
  if (values.empty()) throw CliError("--values needs at least one value");
  for (const std::string& v : values) {
    if (axis == "patch_size") {
      if (v != "16" && v != "32" && v != "48" && v != "64") {
        throw CliError("patch_size values must be 16, 32, 48 or 64, got '" + v + "'");
      }
    } else if (axis == "plane_count") {
      if (v.size() != 1 || v[0] < '1' || v[0] > '6') {
        throw CliError("plane_count values must be in 1..6, got '" + v + "'");
      }
    } else if (axis == "strategy") {
      const bool seeded = v.rfind("random:", 0) == 0 && v.size() > 7 &&
                          v.find_first_not_of("0123456789", 7) == std::string::npos;
      if (v != "max" && v != "min" && v != "random" && !seeded) {
        throw CliError("strategy values must be max, min, random or random:<seed>, got '" +
                       v + "'");
      }
    } else {
      throw CliError("--axis must be patch_size, strategy or plane_count, got '" + axis + "'");
    }
  }
}

int RunAblation(const fs::path& input_dir, const fs::path& out_dir, const std::string& axis,
                const std::vector<std::string>& values, const ExtractOptions& opts,
                std::ostream& log) {
  ValidateAblation(axis, values);
  BuildConfig(opts);
  EnsureWritableDir(out_dir);

  int exit_code = kExitOk;
  std::string csv = "axis,value,dir,config_hash,records,errors,mean_score\n";
  for (const std::string& v : values) {
    ExtractOptions run = opts;
    std::string dir_name = axis + "-" + v;
    if (axis == "patch_size") {
      run.patch_size = std::stoi(v);
    } else if (axis == "plane_count") {
      run.planes = std::stoi(v);
    } else if (v.rfind("random:", 0) == 0) {
      run.strategy = "random";
      run.seed = std::stoull(v.substr(7));
      dir_name = axis + "-random-" + v.substr(7);
    } else {
      run.strategy = v;
    }
    log << "[" << axis << "=" << v << "] ";
    const ExtractOutcome outcome = RunExtract(input_dir, out_dir / dir_name, run, log);
    exit_code = std::max(exit_code, outcome.exit_code);

    double score_sum = 0.0;
    size_t ok = 0;
    for (const auto& r : outcome.manifest["records"]) {
      if (r["status"] == "ok") {
        score_sum += r["score"].get<double>();
        ++ok;
      }
    }
    char mean[32];
    std::snprintf(mean, sizeof(mean), "%.3f", ok ? score_sum / ok : 0.0);
    const auto& summary = outcome.manifest["summary"];
    csv += axis + "," + v + "," + dir_name + "," +
           outcome.manifest["config_hash"].get<std::string>() + "," +
           std::to_string(summary["records"].get<size_t>()) + "," +
           std::to_string(summary["errors"].get<size_t>()) + "," + mean + "\n";
  }
  WriteText(out_dir / "ablation.csv", csv);
  return exit_code;
}

MetricsReport RunMetrics(const fs::path& scores_csv, double threshold, std::ostream& log) {
  std::ifstream in(scores_csv);
  if (!in) throw CliError("cannot open score file " + scores_csv.string());
  std::string line;
  if (!std::getline(in, line)) throw CliError("score file is empty: " + scores_csv.string());
  const auto header = SplitCsvLine(line);
  auto column = [&](std::initializer_list<const char*> names) -> int {
    for (size_t i = 0; i < header.size(); ++i) {
      for (const char* n : names) {
        if (header[i] == n) return static_cast<int>(i);
      }
    }
    return -1;
  };
  const int prob_col = column({"prob_fake", "probability"});
  const int label_col = column({"label"});
  const int gen_col = column({"generator"});
  if (prob_col < 0 || label_col < 0) {
    throw CliError("score file needs 'prob_fake' and 'label' columns");
  }

  std::vector<double> probs;
  std::vector<uint8_t> labels;
  std::map<std::string, std::pair<std::vector<double>, std::vector<uint8_t>>> by_gen;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    const auto f = SplitCsvLine(line);
    const std::string where = "score file line " + std::to_string(line_no);
    if (static_cast<int>(f.size()) <= std::max(prob_col, label_col)) {
      throw CliError(where + ": too few columns");
    }
    double p = 0.0;
    try {
      size_t used = 0;
      p = std::stod(f[prob_col], &used);
      if (used != f[prob_col].size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw CliError(where + ": bad probability '" + f[prob_col] + "'");
    }
    if (!(p >= 0.0 && p <= 1.0)) throw CliError(where + ": probability outside [0, 1]");
    const auto fake = ParseLabel(f[label_col]);
    if (!fake) throw CliError(where + ": bad label '" + f[label_col] + "'");
    probs.push_back(p);
    labels.push_back(*fake ? 1 : 0);
    if (gen_col >= 0 && gen_col < static_cast<int>(f.size()) && !f[gen_col].empty()) {
      by_gen[f[gen_col]].first.push_back(p);
      by_gen[f[gen_col]].second.push_back(*fake ? 1 : 0);
    }
  }
  if (probs.empty()) throw CliError("score file has no samples: " + scores_csv.string());

  MetricsReport report;
  report.samples = probs.size();
  Check(lota_compute_accuracy(probs.data(), labels.data(), probs.size(), threshold,
                              &report.accuracy));
  Check(lota_compute_average_precision(probs.data(), labels.data(), probs.size(),
                                       &report.average_precision));
  char buf[160];
  std::snprintf(buf, sizeof(buf), "samples %zu\nthreshold %.4f\nACC %.6f\nAP %.6f\n",
                report.samples, threshold, report.accuracy, report.average_precision);
  log << buf;
  for (const auto& [gen, data] : by_gen) {
    double acc = 0.0;
    double ap = 0.0;
    Check(lota_compute_accuracy(data.first.data(), data.second.data(), data.first.size(),
                                threshold, &acc));
    const bool both = std::count(data.second.begin(), data.second.end(), 1) > 0 &&
                      std::count(data.second.begin(), data.second.end(), 0) > 0;
    if (both) {
      Check(lota_compute_average_precision(data.first.data(), data.second.data(),
                                           data.first.size(), &ap));
      std::snprintf(buf, sizeof(buf), "  %-16s n=%-6zu ACC %.6f AP %.6f\n", gen.c_str(),
                    data.first.size(), acc, ap);
    } else {
      std::snprintf(buf, sizeof(buf), "  %-16s n=%-6zu ACC %.6f AP n/a (single class)\n",
                    gen.c_str(), data.first.size(), acc);
    }
    log << buf;
  }
  return report;
}

int RunDegrade(const fs::path& input, const fs::path& out, double blur_sigma, int jpeg_quality,
               std::ostream& log) {
  if (!(blur_sigma >= 0.0)) throw CliError("--blur-sigma must be >= 0");
  if (jpeg_quality < 0 || jpeg_quality > 100) {
    throw CliError("--jpeg-quality must be in 1..100 (0 disables)");
  }

  std::vector<std::pair<fs::path, fs::path>> jobs;
  std::error_code ec;
  if (fs::is_regular_file(input, ec)) {
    fs::path target = out;
    if (out.extension() != ".png") {
      target = out / PngName(input.filename().string());
    }
    jobs.emplace_back(input, target);
  } else if (fs::is_directory(input, ec)) {
    for (const DatasetEntry& e : ScanDataset(input)) {
      jobs.emplace_back(e.path, out / PngName(e.relative));
    }
  } else {
    throw CliError("input does not exist: " + input.string());
  }

  int exit_code = kExitOk;
  for (const auto& [src, dst] : jobs) {
    try {
      lota_image* raw = nullptr;
      Check(lota_image_load(src.string().c_str(), &raw));
      ImagePtr img(raw);
      if (blur_sigma > 0.0) {
        Check(lota_degrade_gaussian(img.get(), blur_sigma, &raw));
        img.reset(raw);
      }
      if (jpeg_quality > 0) {
        Check(lota_degrade_jpeg(img.get(), jpeg_quality, &raw));
        img.reset(raw);
      }
      SaveImage(img.get(), dst);
    } catch (const std::exception& e) {
      log << "  error: " << src.string() << ": " << e.what() << "\n";
      exit_code = kExitPartial;
    }
  }
  log << "degraded " << jobs.size() << " image(s) (blur sigma " << blur_sigma
      << ", jpeg quality " << (jpeg_quality ? std::to_string(jpeg_quality) : "off")
      << ") -> " << out.string() << "\n";
  return exit_code;
}

}  // namespace lota_cli
