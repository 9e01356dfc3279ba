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

// lota: batch front end for low-bit noise patch extraction.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "handles.hpp"
#include "options.hpp"

namespace {

void AddExtractFlags(CLI::App* cmd, lota_cli::ExtractOptions& o) {
  cmd->add_option("--planes", o.planes, "Number of least significant bit-planes (1..8)")
      ->check(CLI::Range(1, 8));
  cmd->add_option("--norm", o.norm, "Noise normalization")
      ->check(CLI::IsMember({"threshold", "scale"}));
  cmd->add_option("--patch-size", o.patch_size, "Patch edge length in pixels");
  cmd->add_option("--strategy", o.strategy, "Patch selection strategy")
      ->check(CLI::IsMember({"max", "min", "random"}));
  cmd->add_option("--seed", o.seed, "Seed for the random strategy");
  cmd->add_option("--resize-filter", o.resize_filter, "Noise and patch resize filter")
      ->check(CLI::IsMember({"nearest", "bilinear"}));
  cmd->add_option("--blur-sigma", o.blur_sigma, "Gaussian blur applied before extraction")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--jpeg-quality", o.jpeg_quality,
                  "JPEG round trip applied before extraction (1..100)")
      ->check(CLI::Range(1, 100));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LOTA low-bit noise patch extraction"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lota_version()));

  lota_cli::ExtractOptions opts;
  std::string input;
  std::string out = "lota_out";

  auto* extract = app.add_subcommand("extract", "Extract one noise patch per image");
  extract->add_option("input", input, "Dataset root (<subset>/<split>/{ai,nature}/...)")
      ->required();
  extract->add_option("--out", out, "Output directory");
  extract->add_option("--labels", opts.labels_csv, "CSV with path,label[,generator] overrides");
  extract->add_option("--jobs", opts.jobs, "Worker threads (0 = all cores)");
  extract->add_flag("--emit-nbc", opts.emit_nbc, "Also write 256x256 upsampled patches");
  AddExtractFlags(extract, opts);

  int iterations = 10;
  std::string csv;
  auto* bench = app.add_subcommand("bench", "Single-threaded per-stage latency report");
  bench->add_option("input", input, "Directory of images")->required();
  bench->add_option("--iterations", iterations, "Passes over the images (first is warm-up)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--out", out, "Directory for bench.csv");
  bench->add_option("--csv", csv, "Explicit CSV path (overrides --out)");
  AddExtractFlags(bench, opts);

  std::string axis;
  std::vector<std::string> values;
  auto* ablate = app.add_subcommand("ablate", "One extraction pass per ablation value");
  ablate->add_option("input", input, "Dataset root")->required();
  ablate->add_option("--axis", axis, "patch_size | strategy | plane_count")->required();
  ablate->add_option("--values", values, "Comma-separated axis values")
      ->required()
      ->delimiter(',');
  ablate->add_option("--out", out, "Output directory");
  ablate->add_option("--labels", opts.labels_csv, "CSV with path,label[,generator] overrides");
  ablate->add_option("--jobs", opts.jobs, "Worker threads (0 = all cores)");
  AddExtractFlags(ablate, opts);

  double threshold = 0.5;
  auto* metrics = app.add_subcommand("metrics", "ACC and AP over a score CSV");
  metrics->add_option("scores", input, "CSV with id,prob_fake,label[,generator]")->required();
  metrics->add_option("--threshold", threshold, "Decision threshold for ACC");

  double blur_sigma = 0.0;
  int jpeg_quality = 0;
  auto* degrade = app.add_subcommand("degrade", "Blur and/or JPEG-compress images");
  degrade->add_option("input", input, "Image file or directory")->required();
  degrade->add_option("--out", out, "Output directory, or .png path for a single file")
      ->required();
  degrade->add_option("--blur-sigma", blur_sigma, "Gaussian blur sigma")
      ->check(CLI::NonNegativeNumber);
  degrade->add_option("--jpeg-quality", jpeg_quality, "JPEG quality (1..100)")
      ->check(CLI::Range(1, 100));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lota_cli::kExitStartup;
  }

  try {
    if (*extract) return lota_cli::RunExtract(input, out, opts, std::cout).exit_code;
    if (*bench) {
      const std::filesystem::path csv_path =
          csv.empty() ? std::filesystem::path(out) / "bench.csv" : std::filesystem::path(csv);
      return lota_cli::RunBench(input, iterations, opts, csv_path, std::cout);
    }
    if (*ablate) return lota_cli::RunAblation(input, out, axis, values, opts, std::cout);
    if (*metrics) {
      lota_cli::RunMetrics(input, threshold, std::cout);
      return lota_cli::kExitOk;
    }
    if (*degrade) return lota_cli::RunDegrade(input, out, blur_sigma, jpeg_quality, std::cout);
  } catch (const lota_cli::CliError& e) {
    std::cerr << "lota: " << e.what() << "\n";
    return lota_cli::kExitStartup;
  } catch (const std::exception& e) {
    std::cerr << "lota: " << e.what() << "\n";
    return lota_cli::kExitStartup;
  }
  return lota_cli::kExitStartup;
}
