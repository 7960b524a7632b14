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

#include "objectaug/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <numeric>
#include <thread>

#include "json.hpp"
#include "objectaug/assemble.hpp"
#include "objectaug/parsing.hpp"
#include "objectaug/png_codec.hpp"

namespace objectaug {
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

class StageTimer {
 public:
  StageTimer(RunReport* report, const char* stage)
      : report_(report), stage_(stage), start_(Clock::now()) {}
  ~StageTimer() {
    if (report_) {
      report_->stage_seconds[stage_] +=
          std::chrono::duration<double>(Clock::now() - start_).count();
    }
  }
  StageTimer(const StageTimer&) = delete;
  StageTimer& operator=(const StageTimer&) = delete;

 private:
  RunReport* report_;
  const char* stage_;
  Clock::time_point start_;
};

}  // namespace

void RunReport::merge(const RunReport& other) {
  samples_in += other.samples_in;
  samples_out += other.samples_out;
  objects_seen += other.objects_seen;
  objects_augmented += other.objects_augmented;
  objects_skipped += other.objects_skipped;
  for (const auto& [k, v] : other.op_counts) op_counts[k] += v;
  for (const auto& [k, v] : other.category_counts) category_counts[k] += v;
  for (const auto& [k, v] : other.stage_seconds) stage_seconds[k] += v;
  failures.insert(failures.end(), other.failures.begin(),
                  other.failures.end());
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["samples_in"] = samples_in;
  doc["samples_out"] = samples_out;
  doc["objects_seen"] = objects_seen;
  doc["objects_augmented"] = objects_augmented;
  doc["objects_skipped"] = objects_skipped;
  doc["op_counts"] = op_counts;
  nlohmann::ordered_json per_category = nlohmann::ordered_json::object();
  for (const auto& [category, n] : category_counts) {
    per_category[std::to_string(category)] = n;
  }
  doc["category_counts"] = per_category;
  doc["wall_time_s"] = wall_time_s;
  doc["fill_strategy"] = fill_strategy;
  doc["stage_seconds"] = stage_seconds;
  nlohmann::ordered_json errors = nlohmann::ordered_json::array();
  for (const SampleFailure& f : failures) {
    errors.push_back({{"sample", f.sample}, {"error", f.error}});
  }
  doc["failures"] = errors;
  return doc.dump(2);
}

SampleAugmenter::SampleAugmenter(const PipelineConfig& config,
                                 const CategoryCoefficients& coeffs)
    : config_(config), coeffs_(coeffs), fill_(config.fill.resolve()) {
  config.validate();
}

LabeledSample SampleAugmenter::run(const LabeledSample& sample,
                                   std::uint64_t seed,
                                   RunReport* report) const {
  validate_sample(sample);
  ParsedMask parsed;
  {
    StageTimer t(report, "parse");
    parsed = split_mask(sample.mask, config_.min_area);
  }
  std::vector<std::size_t> order(parsed.instances.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return parsed.instances[a].area > parsed.instances[b].area;
                   });

  LabeledSample out = sample;
  const int width = sample.image.width();
  const int height = sample.image.height();
  for (std::size_t ordinal = 0; ordinal < order.size(); ++ordinal) {
    const std::size_t index = order[ordinal];
    const ObjectInstance& inst = parsed.instances[index];
    if (config_.allowlist && !config_.allowlist->contains(inst.category)) {
      continue;
    }
    if (report) ++report->objects_seen;

    const std::uint64_t object_seed = mix_seed(seed, ordinal);
    Rng plan_rng(mix_seed(object_seed, 1));
    Rng fill_rng(mix_seed(object_seed, 2));
    const AugmentPlan plan =
        build_plan(config_.ops, inst.category, coeffs_, plan_rng);
    if (plan.empty()) continue;

    const CropSpec crop_spec =
        compute_crop(inst, index, config_.crop_margin, width, height);
    auto [image_patch, mask_patch] = crop_patch(out.image, out.mask, crop_spec);

    // Earlier (larger) objects may have been pasted over part of this one;
    // only pixels still carrying its label belong to it.
    BinaryMask object_mask = crop(inst.mask, crop_spec.rect);
    for (std::size_t i = 0; i < object_mask.pixel_count(); ++i) {
      object_mask.data()[i] = object_mask.data()[i] &&
                              mask_patch.data()[i] == inst.category;
    }
    if (count_set(object_mask) == 0) {
      if (report) ++report->objects_skipped;
      continue;
    }

    AugmentResult augmented;
    {
      StageTimer t(report, "augment");
      augmented = apply_plan(apply_mask(image_patch, object_mask), object_mask,
                             plan);
    }
    if (augmented.applied_count() == 0) {
      if (report) ++report->objects_skipped;
      continue;
    }

    RgbImage inpainted;
    {
      StageTimer t(report, "fill");
      inpainted = inpaint_background(image_patch, object_mask,
                                     config_.dilation_radius, fill_, fill_rng);
    }
    {
      StageTimer t(report, "assemble");
      const AssembledPatch patch = compose_patch(AssemblyInputs{
          image_patch, mask_patch, object_mask, augmented.image,
          augmented.mask, inpainted, inst.category});
      paste_patch(out.image, out.mask, crop_spec, patch.image, patch.mask);
    }

    if (report) {
      ++report->objects_augmented;
      ++report->category_counts[inst.category];
      for (std::size_t s = 0; s < plan.steps.size(); ++s) {
        if (augmented.applied[s]) {
          ++report->op_counts[std::string(op_name(step_kind(plan.steps[s])))];
        }
      }
    }
  }
  return out;
}

LabeledSample augment_sample(const LabeledSample& sample,
                             const PipelineConfig& config,
                             const CategoryCoefficients& coeffs,
                             std::uint64_t seed, RunReport* report) {
  return SampleAugmenter(config, coeffs).run(sample, seed, report);
}

std::uint64_t sample_seed(std::uint64_t master_seed, std::string_view stem,
                          int copy) {
  return mix_seed(mix_seed(master_seed, hash_id(stem)),
                  static_cast<std::uint64_t>(copy));
}

CategoryCoefficients compute_coefficients(const PipelineConfig& config,
                                          std::span<const LabelMap> masks) {
  switch (config.coefficient_mode) {
    case CoefficientMode::kUniform:
      return CategoryCoefficients{};
    case CoefficientMode::kHardDriven:
      return hard_coefficients(load_scores(config.scores_path));
    case CoefficientMode::kRarityDriven: {
      const CategoryStats stats = scan_category_stats(masks, config.min_area);
      // No objects anywhere: nothing to weight.
      if (stats.counts.empty()) {
        return CategoryCoefficients{CoefficientMode::kRarityDriven, {}};
      }
      return rarity_coefficients(stats.counts);
    }
  }
  return CategoryCoefficients{};
}

namespace {

bool is_png(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".png";
}

std::map<std::string, fs::path> list_pngs(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw IoError("not a directory: " + dir.string());
  }
  std::map<std::string, fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && is_png(entry.path())) {
      out.emplace(entry.path().stem().string(), entry.path());
    }
  }
  return out;
}

struct SamplePair {
  std::string stem;
  fs::path image;
  fs::path mask;
};

std::vector<SamplePair> pair_by_stem(const fs::path& image_dir,
                                     const fs::path& mask_dir) {
  const auto images = list_pngs(image_dir);
  const auto masks = list_pngs(mask_dir);
  std::vector<SamplePair> pairs;
  std::string unmatched;
  for (const auto& [stem, path] : images) {
    auto it = masks.find(stem);
    if (it == masks.end()) {
      unmatched += " image:" + stem;
    } else {
      pairs.push_back({stem, path, it->second});
    }
  }
  for (const auto& [stem, path] : masks) {
    if (!images.contains(stem)) unmatched += " mask:" + stem;
  }
  if (!unmatched.empty()) {
    throw PairingError("files without a partner:" + unmatched);
  }
  return pairs;  // sorted by stem (std::map order)
}

}  // namespace

RunReport augment_dataset(const fs::path& image_dir, const fs::path& mask_dir,
                          const fs::path& out_dir, const PipelineConfig& config,
                          int workers) {
  const auto start = Clock::now();
  config.validate();
  const std::vector<SamplePair> pairs = pair_by_stem(image_dir, mask_dir);

  std::vector<LabelMap> stat_masks;
  if (config.coefficient_mode == CoefficientMode::kRarityDriven) {
    for (const SamplePair& p : pairs) {
      try {
        stat_masks.push_back(decode_index_png(read_file(p.mask)));
      } catch (const Error&) {
        // Reported when the sample itself is processed.
      }
    }
  }
  const CategoryCoefficients coeffs = compute_coefficients(config, stat_masks);
  stat_masks.clear();

  std::error_code ec;
  fs::create_directories(out_dir / "images", ec);
  if (!ec) fs::create_directories(out_dir / "masks", ec);
  if (ec) throw IoError("cannot create " + out_dir.string());

  const SampleAugmenter augmenter(config, coeffs);
  const int n_workers = std::max(1, workers);
  std::vector<RunReport> partials(n_workers);
  std::atomic<std::size_t> next{0};

  auto work = [&](RunReport& report) {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      const SamplePair& pair = pairs[i];
      ++report.samples_in;
      LabeledSample sample;
      try {
        StageTimer t(&report, "io");
        sample = load_sample(pair.image, pair.mask);
      } catch (const Error& e) {
        report.failures.push_back({pair.stem, e.what()});
        continue;
      }
      for (int copy = 0; copy < config.multiplier; ++copy) {
        const std::string out_id = pair.stem + "_aug" + std::to_string(copy);
        try {
          LabeledSample result = augmenter.run(
              sample, sample_seed(config.seed, pair.stem, copy), &report);
          result.id = out_id;
          StageTimer t(&report, "io");
          write_sample(result, out_dir);
          ++report.samples_out;
        } catch (const Error& e) {
          report.failures.push_back({out_id, e.what()});
        }
      }
    }
  };

  if (n_workers == 1) {
    work(partials[0]);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(n_workers);
    for (int w = 0; w < n_workers; ++w) {
      threads.emplace_back([&, w] { work(partials[w]); });
    }
  }

  RunReport report;
  for (const RunReport& partial : partials) report.merge(partial);
  std::sort(report.failures.begin(), report.failures.end(),
            [](const SampleFailure& a, const SampleFailure& b) {
              return a.sample < b.sample;
            });
  report.fill_strategy = std::string(strategy_name(augmenter.fill()));
  report.wall_time_s =
      std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace objectaug
