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

#include "objectaug/config.hpp"

#include <boost/program_options/parsers.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "objectaug/png_codec.hpp"

namespace objectaug {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string_view unquote(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') &&
      s.back() == s.front()) {
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

ParseError bad_value(std::string_view key, std::string_view value,
                     std::string_view expected) {
  return ParseError(std::string(key) + ": expected " + std::string(expected) +
                    ", got '" + std::string(value) + "'");
}

double parse_double(std::string_view key, std::string_view raw) {
  const std::string_view v = unquote(raw);
  double out = 0.0;
  auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || end != v.data() + v.size() ||
      !std::isfinite(out)) {
    throw bad_value(key, raw, "a number");
  }
  return out;
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view raw) {
  const std::string_view v = unquote(raw);
  Int out = 0;
  auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || end != v.data() + v.size()) {
    throw bad_value(key, raw, "an integer");
  }
  return out;
}

CategorySet parse_category_list(std::string_view key, std::string_view raw) {
  std::string_view v = unquote(raw);
  if (!v.empty() && v.front() == '[' && v.back() == ']') {
    v = v.substr(1, v.size() - 2);
  }
  CategorySet out;
  std::string item;
  std::istringstream in{std::string(v)};
  while (std::getline(in, item, ',')) {
    const std::string_view t = trim(item);
    if (t.empty()) continue;
    const int id = parse_int<int>(key, t);
    if (id <= kBackgroundLabel || id >= kIgnoreLabel) {
      throw bad_value(key, t, "a category id in 1..254");
    }
    out.insert(static_cast<CategoryId>(id));
  }
  return out;
}

OpSpec& find_op(PipelineConfig& config, OpKind kind) {
  for (OpSpec& op : config.ops) {
    if (op.kind == kind) return op;
  }
  config.ops.push_back(OpSpec{kind, 0.0, 0.0});
  return config.ops.back();
}

}  // namespace

FillStrategy FillSettings::resolve() const {
  FillStrategy out;
  if (strategy == "none") {
    out = NoFill{};
  } else if (strategy == "noise") {
    out = NoiseFill{};
  } else if (strategy == "diffusion") {
    out = DiffusionFill{diffusion_iters};
  } else if (strategy == "external") {
    if (endpoint.empty()) {
      throw ValidationError("fill.strategy = external requires fill.endpoint");
    }
    if (!(timeout_s > 0.0)) {
      throw ValidationError("fill.timeout_s must be > 0");
    }
    if (max_connections < 1) {
      throw ValidationError("fill.max_connections must be >= 1");
    }
    out = ExternalFill{
        endpoint,
        std::chrono::milliseconds(
            static_cast<std::int64_t>(std::llround(timeout_s * 1000.0))),
        std::make_shared<RequestGate>(max_connections)};
  } else {
    throw ValidationError("fill.strategy must be none, noise, diffusion or "
                          "external, got '" + strategy + "'");
  }
  validate_strategy(out);
  return out;
}

void PipelineConfig::validate() const {
  if (multiplier < 1) throw ValidationError("multiplier must be >= 1");
  if (min_area < 1) throw ValidationError("min_area must be >= 1");
  if (dilation_radius < 0) {
    throw ValidationError("dilation_radius must be >= 0");
  }
  if (!(crop_margin >= 1.0)) {
    throw ValidationError("crop_margin must be >= 1.0");
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    ops[i].validate();
    for (std::size_t j = 0; j < i; ++j) {
      if (ops[j].kind == ops[i].kind) {
        throw ValidationError("duplicate op " +
                              std::string(op_name(ops[i].kind)));
      }
    }
  }
  if (coefficient_mode == CoefficientMode::kHardDriven &&
      scores_path.empty()) {
    throw ValidationError(
        "coefficients.mode = hard requires coefficients.scores_path");
  }
  fill.resolve();
}

void set_config_value(PipelineConfig& config, std::string_view key,
                      std::string_view value) {
  const std::string_view v = unquote(value);
  if (key == "seed") {
    config.seed = parse_int<std::uint64_t>(key, value);
  } else if (key == "multiplier") {
    config.multiplier = parse_int<int>(key, value);
  } else if (key == "crop_margin") {
    config.crop_margin = parse_double(key, value);
  } else if (key == "min_area") {
    const auto area = parse_int<std::int64_t>(key, value);
    if (area < 0) throw bad_value(key, value, "a non-negative integer");
    config.min_area = static_cast<std::size_t>(area);
  } else if (key == "dilation_radius") {
    config.dilation_radius = parse_int<int>(key, value);
  } else if (key == "fill.strategy") {
    config.fill.strategy = std::string(v);
  } else if (key == "fill.endpoint") {
    config.fill.endpoint = std::string(v);
  } else if (key == "fill.diffusion_iters") {
    config.fill.diffusion_iters = parse_int<int>(key, value);
  } else if (key == "fill.timeout_s") {
    config.fill.timeout_s = parse_double(key, value);
  } else if (key == "fill.max_connections") {
    config.fill.max_connections = parse_int<int>(key, value);
  } else if (key == "coefficients.mode") {
    if (v == "uniform") {
      config.coefficient_mode = CoefficientMode::kUniform;
    } else if (v == "hard" || v == "hard_driven") {
      config.coefficient_mode = CoefficientMode::kHardDriven;
    } else if (v == "rarity" || v == "rarity_driven") {
      config.coefficient_mode = CoefficientMode::kRarityDriven;
    } else {
      throw bad_value(key, value, "uniform, hard or rarity");
    }
  } else if (key == "coefficients.scores_path") {
    config.scores_path = std::string(v);
  } else if (key == "ops.scale.prob") {
    find_op(config, OpKind::kScale).probability = parse_double(key, value);
  } else if (key == "ops.scale.max") {
    find_op(config, OpKind::kScale).magnitude = parse_double(key, value);
  } else if (key == "ops.rotate.prob") {
    find_op(config, OpKind::kRotate).probability = parse_double(key, value);
  } else if (key == "ops.rotate.max_deg") {
    find_op(config, OpKind::kRotate).magnitude = parse_double(key, value);
  } else if (key == "ops.shift.prob") {
    find_op(config, OpKind::kShift).probability = parse_double(key, value);
  } else if (key == "ops.shift.max_px") {
    find_op(config, OpKind::kShift).magnitude = parse_double(key, value);
  } else if (key == "ops.flip.prob") {
    find_op(config, OpKind::kFlipH).probability = parse_double(key, value);
  } else if (key == "ops.brightness.prob") {
    find_op(config, OpKind::kBrightness).probability = parse_double(key, value);
  } else if (key == "ops.brightness.max") {
    find_op(config, OpKind::kBrightness).magnitude = parse_double(key, value);
  } else if (key == "categories.allowlist") {
    if (v.empty()) {
      config.allowlist.reset();
    } else {
      config.allowlist = parse_category_list(key, value);
    }
  } else {
    throw ParseError("unknown config key '" + std::string(key) + "'");
  }
}

PipelineConfig parse_config_text(std::string_view text) {
  namespace po = boost::program_options;
  std::istringstream in{std::string(text)};
  po::parsed_options parsed(nullptr);
  try {
    parsed = po::parse_config_file(in, po::options_description(), true);
  } catch (const po::error& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  PipelineConfig config;
  for (const po::option& opt : parsed.options) {
    const std::string value = opt.value.empty() ? "" : opt.value.back();
    set_config_value(config, opt.string_key, value);
  }
  config.validate();
  return config;
}

PipelineConfig parse_config(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  return parse_config_text(std::string_view(
      reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

}  // namespace objectaug
