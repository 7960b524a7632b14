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

#ifndef OBJECTAUG_AUGMENT_HPP_
#define OBJECTAUG_AUGMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "objectaug/random.hpp"
#include "objectaug/raster.hpp"

namespace objectaug {

enum class OpKind { kScale, kRotate, kShift, kFlipH, kBrightness };

std::string_view op_name(OpKind kind);

// One augmentation with its base probability and magnitude bound:
//   kScale       factor in [1 - magnitude, 1 + magnitude], magnitude < 1
//   kRotate      angle in [-magnitude, +magnitude] degrees
//   kShift       integer offset per axis in [-magnitude, +magnitude] pixels
//   kFlipH       no magnitude
//   kBrightness  multiplier in [1 - magnitude, 1 + magnitude]
struct OpSpec {
  OpKind kind = OpKind::kScale;
  double probability = 0.0;
  double magnitude = 0.0;

  void validate() const;
};

// Scale 0.2, rotate 15 deg, shift 5 px with probabilities 0.2/0.2/0.1,
// flip 0.5, brightness disabled.
std::vector<OpSpec> default_ops();

struct ScaleStep {
  double factor = 1.0;
};
struct RotateStep {
  double degrees = 0.0;
};
struct ShiftStep {
  int dx = 0;
  int dy = 0;
};
struct FlipStep {};
struct BrightnessStep {
  double factor = 1.0;
};

using AugmentStep =
    std::variant<ScaleStep, RotateStep, ShiftStep, FlipStep, BrightnessStep>;

OpKind step_kind(const AugmentStep& step);

struct AugmentPlan {
  std::vector<AugmentStep> steps;

  bool empty() const { return steps.empty(); }
};

enum class CoefficientMode { kUniform, kHardDriven, kRarityDriven };

// Per-category multipliers on op probabilities. Categories without an
// entry use 1.
struct CategoryCoefficients {
  CoefficientMode mode = CoefficientMode::kUniform;
  std::map<std::uint8_t, double> values;

  double at(std::uint8_t category) const;
};

// Middle value of the sorted input; mean of the two middle values for an
// even count. Throws EmptyInput.
double median(std::vector<double> values);

// alpha_j = median(p) / p_j.
CategoryCoefficients hard_coefficients(
    const std::map<std::uint8_t, double>& scores);

// beta_j = median(N) / N_j.
CategoryCoefficients rarity_coefficients(
    const std::map<std::uint8_t, std::size_t>& counts);

// min(1, p_m * coefficient of `category`).
double effective_probability(const OpSpec& op, std::uint8_t category,
                             const CategoryCoefficients& coeffs);

// For each op in order: draw u in [0, 1), include the op iff u is below its
// effective probability, then draw its parameters. The number and order of
// draws depends only on the ops and the outcomes, so equal seeds give
// equal plans.
AugmentPlan build_plan(std::span<const OpSpec> ops, std::uint8_t category,
                       const CategoryCoefficients& coeffs, Rng& rng);

struct AugmentResult {
  RgbImage image;
  BinaryMask mask;
  // applied[i] is false when plan step i was degenerate and skipped.
  std::vector<bool> applied;

  std::size_t applied_count() const;
};

// Applies the plan to an object patch. `image` must be zero outside `mask`;
// the result keeps that property and the input dimensions. Scale and rotate
// act about the patch centre; the mask is resampled nearest-neighbour and
// the image bilinearly over the object's own pixels. A step whose result
// has an empty mask, or a shift that would push object pixels out of the
// patch, leaves the patch as it was.
AugmentResult apply_plan(const RgbImage& image, const BinaryMask& mask,
                         const AugmentPlan& plan);

}  // namespace objectaug

#endif  // OBJECTAUG_AUGMENT_HPP_
