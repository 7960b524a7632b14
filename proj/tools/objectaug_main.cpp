// Copyright 2026 The objectaug Authors.
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

// objectaug: writes object-level augmented copies of a segmentation dataset.
//
//   objectaug run --config aug.cfg --images voc/img --masks voc/seg \
//       --out voc_aug --multiplier 2 --workers 8 --report report.json
//
// Exit codes: 0 success, 1 some sample failed, 2 configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "objectaug/config.hpp"
#include "objectaug/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSampleFailed = 1;
constexpr int kExitConfig = 2;

struct RunArgs {
  std::string config_path;
  std::string images;
  std::string masks;
  std::string out;
  std::optional<std::string> seed;
  std::optional<std::string> multiplier;
  std::optional<std::string> fill;
  std::optional<std::string> endpoint;
  int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string report_path;
};

int run(const RunArgs& args) {
  objectaug::PipelineConfig config;
  try {
    if (!args.config_path.empty()) {
      config = objectaug::parse_config(args.config_path);
    }
    if (args.seed) objectaug::set_config_value(config, "seed", *args.seed);
    if (args.multiplier) {
      objectaug::set_config_value(config, "multiplier", *args.multiplier);
    }
    if (args.fill) {
      objectaug::set_config_value(config, "fill.strategy", *args.fill);
    }
    if (args.endpoint) {
      objectaug::set_config_value(config, "fill.endpoint", *args.endpoint);
    }
    config.validate();
  } catch (const objectaug::Error& e) {
    std::cerr << "objectaug: configuration error: " << e.what() << "\n";
    return kExitConfig;
  }

  objectaug::RunReport report;
  try {
    report = objectaug::augment_dataset(args.images, args.masks, args.out,
                                        config, args.workers);
  } catch (const objectaug::PairingError& e) {
    std::cerr << "objectaug: " << e.what() << "\n";
    return kExitConfig;
  } catch (const objectaug::Error& e) {
    std::cerr << "objectaug: " << e.what() << "\n";
    return kExitConfig;
  }

  const std::string json = report.to_json();
  if (args.report_path.empty()) {
    std::cout << json << "\n";
  } else {
    std::ofstream out(args.report_path);
    out << json << "\n";
    if (!out) {
      std::cerr << "objectaug: cannot write report " << args.report_path
                << "\n";
      return kExitSampleFailed;
    }
  }
  std::cerr << "objectaug: " << report.samples_in << " samples in, "
            << report.samples_out << " written, " << report.objects_augmented
            << "/" << report.objects_seen << " objects augmented, "
            << report.failures.size() << " failures, " << report.wall_time_s
            << " s\n";
  return report.failures.empty() ? kExitOk : kExitSampleFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Object-level data augmentation for semantic segmentation"};
  app.require_subcommand(1);

  RunArgs args;
  CLI::App* run_cmd =
      app.add_subcommand("run", "Augment an image/mask directory pair");
  run_cmd->add_option("--config", args.config_path, "Config file")
      ->check(CLI::ExistingFile);
  run_cmd->add_option("--images", args.images, "Directory of RGB PNG images")
      ->required();
  run_cmd->add_option("--masks", args.masks, "Directory of label PNG masks")
      ->required();
  run_cmd->add_option("--out", args.out, "Output directory")->required();
  run_cmd->add_option("--seed", args.seed, "Master seed (overrides config)");
  run_cmd->add_option("--multiplier", args.multiplier,
                      "Augmented copies per sample (overrides config)");
  run_cmd->add_option("--fill", args.fill, "Fill strategy")
      ->check(CLI::IsMember({"none", "noise", "diffusion", "external"}));
  run_cmd->add_option("--endpoint", args.endpoint,
                      "Inpainting service URL for --fill external");
  run_cmd->add_option("--workers", args.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--report", args.report_path,
                      "Write the JSON run report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }
  return run(args);
}
