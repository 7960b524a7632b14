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

#ifndef OBJECTAUG_PIPELINE_HPP_
#define OBJECTAUG_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "objectaug/augment.hpp"
#include "objectaug/config.hpp"
#include "objectaug/dataset_io.hpp"
#include "objectaug/fill.hpp"

namespace objectaug {

struct SampleFailure {
  std::string sample;
  std::string error;

  friend bool operator==(const SampleFailure&, const SampleFailure&) = default;
};

struct RunReport {
  std::size_t samples_in = 0;
  std::size_t samples_out = 0;
  std::size_t objects_seen = 0;
  std::size_t objects_augmented = 0;
  std::size_t objects_skipped = 0;
  std::map<std::string, std::size_t> op_counts;  // applied steps per op
  std::map<int, std::size_t> category_counts;    // augmented objects
  double wall_time_s = 0.0;
  // Accumulated seconds per stage (parse, augment, fill, assemble, io),
  // summed over workers.
  std::map<std::string, double> stage_seconds;
  std::string fill_strategy;
  std::vector<SampleFailure> failures;

  void merge(const RunReport& other);
  std::string to_json() const;
};

// Runs the object-level augmentation on one sample with an already
// resolved fill strategy. The input is never modified.
class SampleAugmenter {
 public:
  SampleAugmenter(const PipelineConfig& config,
                  const CategoryCoefficients& coeffs);

  // Objects are visited in descending area order; each one is cropped from
  // the image as left by the previous ones. Object o draws its randomness
  // from mix_seed(seed, o).
  LabeledSample run(const LabeledSample& sample, std::uint64_t seed,
                    RunReport* report = nullptr) const;

  const FillStrategy& fill() const { return fill_; }

 private:
  const PipelineConfig& config_;
  const CategoryCoefficients& coeffs_;
  FillStrategy fill_;
};

LabeledSample augment_sample(const LabeledSample& sample,
                             const PipelineConfig& config,
                             const CategoryCoefficients& coeffs,
                             std::uint64_t seed, RunReport* report = nullptr);

// Seed for copy `copy` of the sample with file stem `stem`.
std::uint64_t sample_seed(std::uint64_t master_seed, std::string_view stem,
                          int copy);

// Dataset-level coefficients: uniform, hard-driven from the scores file, or
// rarity-driven from object counts over `masks`.
CategoryCoefficients compute_coefficients(const PipelineConfig& config,
                                          std::span<const LabelMap> masks);

// Pairs `image_dir/<stem>.png` with `mask_dir/<stem>.png`, writes
// `multiplier` augmented copies per pair to `out_dir/{images,masks}/
// <stem>_aug<i>.png`. Throws PairingError before any work if a file has no
// partner; per-sample failures are recorded in the report.
RunReport augment_dataset(const std::filesystem::path& image_dir,
                          const std::filesystem::path& mask_dir,
                          const std::filesystem::path& out_dir,
                          const PipelineConfig& config, int workers = 1);

}  // namespace objectaug

#endif  // OBJECTAUG_PIPELINE_HPP_
