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

#ifndef OBJECTAUG_CONFIG_HPP_
#define OBJECTAUG_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "objectaug/augment.hpp"
#include "objectaug/dataset_io.hpp"
#include "objectaug/fill.hpp"

namespace objectaug {

// Fill settings as written in the config file. Resolved into a
// FillStrategy once per run.
struct FillSettings {
  std::string strategy = "diffusion";  // none | noise | diffusion | external
  std::string endpoint;
  int diffusion_iters = 64;
  double timeout_s = 30.0;
  int max_connections = 4;

  // Throws ValidationError.
  FillStrategy resolve() const;
};

struct PipelineConfig {
  std::vector<OpSpec> ops = default_ops();
  CoefficientMode coefficient_mode = CoefficientMode::kUniform;
  std::filesystem::path scores_path;
  FillSettings fill;
  int dilation_radius = 3;
  double crop_margin = 1.5;
  std::size_t min_area = 100;
  int multiplier = 1;
  std::uint64_t seed = 0;
  std::optional<CategorySet> allowlist;

  // Throws ValidationError naming the violated constraint.
  void validate() const;
};

// Applies one `key = value` setting. Throws ParseError naming the key.
void set_config_value(PipelineConfig& config, std::string_view key,
                      std::string_view value);

// Reads `key = value` lines (`#` comments, optional `[section]` headers
// that prefix the keys below them). Absent keys keep their defaults.
// Throws ParseError or ValidationError.
PipelineConfig parse_config_text(std::string_view text);
PipelineConfig parse_config(const std::filesystem::path& path);

}  // namespace objectaug

#endif  // OBJECTAUG_CONFIG_HPP_
