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

#include "objectaug/augment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

namespace objectaug {

std::string_view op_name(OpKind kind) {
  switch (kind) {
    case OpKind::kScale:
      return "scale";
    case OpKind::kRotate:
      return "rotate";
    case OpKind::kShift:
      return "shift";
    case OpKind::kFlipH:
      return "flip";
    case OpKind::kBrightness:
      return "brightness";
  }
  return "unknown";
}

void OpSpec::validate() const {
  const std::string name(op_name(kind));
  if (!(probability >= 0.0 && probability <= 1.0)) {
    throw ValidationError(name + " probability must lie in [0, 1]");
  }
  if (!(magnitude >= 0.0) || !std::isfinite(magnitude)) {
    throw ValidationError(name + " magnitude must be >= 0");
  }
  if (kind == OpKind::kScale && !(magnitude < 1.0)) {
    throw ValidationError("scale magnitude must be < 1");
  }
}

std::vector<OpSpec> default_ops() {
  return {
      {OpKind::kScale, 0.2, 0.2},      {OpKind::kRotate, 0.2, 15.0},
      {OpKind::kShift, 0.1, 5.0},      {OpKind::kFlipH, 0.5, 0.0},
      {OpKind::kBrightness, 0.0, 0.2},
  };
}

OpKind step_kind(const AugmentStep& step) {
  return static_cast<OpKind>(step.index());
}

double CategoryCoefficients::at(std::uint8_t category) const {
  const auto it = values.find(category);
  return it == values.end() ? 1.0 : it->second;
}

double median(std::vector<double> values) {
  if (values.empty()) throw EmptyInput("median of an empty set");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + mid);
  return (lower + upper) / 2.0;
}

CategoryCoefficients hard_coefficients(
    const std::map<std::uint8_t, double>& scores) {
  if (scores.empty()) throw EmptyInput("no category scores");
  std::vector<double> values;
  values.reserve(scores.size());
  for (const auto& [category, score] : scores) {
    if (!(score > 0.0)) {
      throw NonPositiveScore("score of category " + std::to_string(category) +
                             " is not positive");
    }
    values.push_back(score);
  }
  const double mid = median(std::move(values));
  CategoryCoefficients coeffs{CoefficientMode::kHardDriven, {}};
  for (const auto& [category, score] : scores) {
    coeffs.values[category] = mid / score;
  }
  return coeffs;
}

CategoryCoefficients rarity_coefficients(
    const std::map<std::uint8_t, std::size_t>& counts) {
  if (counts.empty()) throw EmptyInput("no category counts");
  std::vector<double> values;
  values.reserve(counts.size());
  for (const auto& [category, count] : counts) {
    if (count == 0) {
      throw ZeroCount("category " + std::to_string(category) +
                      " has no objects");
    }
    values.push_back(static_cast<double>(count));
  }
  const double mid = median(std::move(values));
  CategoryCoefficients coeffs{CoefficientMode::kRarityDriven, {}};
  for (const auto& [category, count] : counts) {
    coeffs.values[category] = mid / static_cast<double>(count);
  }
  return coeffs;
}

double effective_probability(const OpSpec& op, std::uint8_t category,
                             const CategoryCoefficients& coeffs) {
  return std::min(1.0, op.probability * coeffs.at(category));
}

AugmentPlan build_plan(std::span<const OpSpec> ops, std::uint8_t category,
                       const CategoryCoefficients& coeffs, Rng& rng) {
  AugmentPlan plan;
  for (const OpSpec& op : ops) {
    if (!(rng.uniform() < effective_probability(op, category, coeffs))) {
      continue;
    }
    const double m = op.magnitude;
    switch (op.kind) {
      case OpKind::kScale:
        plan.steps.emplace_back(ScaleStep{rng.uniform(1.0 - m, 1.0 + m)});
        break;
      case OpKind::kRotate:
        plan.steps.emplace_back(RotateStep{rng.uniform(-m, m)});
        break;
      case OpKind::kShift: {
        const auto bound = static_cast<std::int64_t>(std::floor(m));
        const int dx = static_cast<int>(rng.uniform_int(-bound, bound));
        const int dy = static_cast<int>(rng.uniform_int(-bound, bound));
        plan.steps.emplace_back(ShiftStep{dx, dy});
        break;
      }
      case OpKind::kFlipH:
        plan.steps.emplace_back(FlipStep{});
        break;
      case OpKind::kBrightness:
        plan.steps.emplace_back(BrightnessStep{rng.uniform(1.0 - m, 1.0 + m)});
        break;
    }
  }
  return plan;
}

std::size_t AugmentResult::applied_count() const {
  return static_cast<std::size_t>(
      std::count(applied.begin(), applied.end(), true));
}

namespace {

std::uint8_t round_channel(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
}

struct Patch {
  RgbImage image;
  BinaryMask mask;
};

// Inverse-maps every destination pixel through `to_source`. The mask takes
// the nearest source pixel. The image interpolates bilinearly over source
// neighbours that belong to the object, renormalised by their weight, so
// zeroed background never bleeds into object edges.
template <typename InverseMap>
Patch resample(const Patch& in, InverseMap to_source) {
  const int w = in.mask.width();
  const int h = in.mask.height();
  Patch out{RgbImage(w, h, 0), BinaryMask(w, h, 0)};
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const auto [sx, sy] = to_source(static_cast<double>(x),
                                      static_cast<double>(y));
      const int nx = static_cast<int>(std::floor(sx + 0.5));
      const int ny = static_cast<int>(std::floor(sy + 0.5));
      if (!in.mask.in_bounds(nx, ny) || in.mask.at(nx, ny) == 0) continue;
      out.mask.at(x, y) = 1;

      const int x0 = static_cast<int>(std::floor(sx));
      const int y0 = static_cast<int>(std::floor(sy));
      const double fx = sx - x0;
      const double fy = sy - y0;
      double acc[3] = {0.0, 0.0, 0.0};
      double total = 0.0;
      for (int j = 0; j < 2; ++j) {
        for (int i = 0; i < 2; ++i) {
          const int px = x0 + i;
          const int py = y0 + j;
          const double weight = (i ? fx : 1.0 - fx) * (j ? fy : 1.0 - fy);
          if (weight == 0.0 || !in.mask.in_bounds(px, py) ||
              in.mask.at(px, py) == 0) {
            continue;
          }
          const auto src = in.image.pixel(px, py);
          for (int c = 0; c < 3; ++c) acc[c] += weight * src[c];
          total += weight;
        }
      }
      // The nearest neighbour is one of the four taps with weight >= 1/4.
      auto dst = out.image.pixel(x, y);
      for (int c = 0; c < 3; ++c) dst[c] = round_channel(acc[c] / total);
    }
  }
  return out;
}

std::pair<double, double> patch_center(const BinaryMask& mask) {
  return {(mask.width() - 1) / 2.0, (mask.height() - 1) / 2.0};
}

std::optional<Patch> apply_step(const Patch& in, const ScaleStep& step) {
  if (step.factor == 1.0) return in;
  const auto [cx, cy] = patch_center(in.mask);
  const double inv = 1.0 / step.factor;
  return resample(in, [=](double x, double y) {
    return std::pair{cx + (x - cx) * inv, cy + (y - cy) * inv};
  });
}

std::optional<Patch> apply_step(const Patch& in, const RotateStep& step) {
  if (step.degrees == 0.0) return in;
  const auto [cx, cy] = patch_center(in.mask);
  const double rad = step.degrees * std::numbers::pi / 180.0;
  const double c = std::cos(rad);
  const double s = std::sin(rad);
  // Forward map rotates by +degrees in image coordinates (y down); the
  // inverse rotates back.
  return resample(in, [=](double x, double y) {
    const double dx = x - cx;
    const double dy = y - cy;
    return std::pair{cx + c * dx + s * dy, cy - s * dx + c * dy};
  });
}

std::optional<Patch> apply_step(const Patch& in, const ShiftStep& step) {
  const int w = in.mask.width();
  const int h = in.mask.height();
  Patch out{RgbImage(w, h, 0), BinaryMask(w, h, 0)};
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (in.mask.at(x, y) == 0) continue;
      const int tx = x + step.dx;
      const int ty = y + step.dy;
      if (!out.mask.in_bounds(tx, ty)) return std::nullopt;
      out.mask.at(tx, ty) = 1;
      const auto src = in.image.pixel(x, y);
      std::copy(src.begin(), src.end(), out.image.pixel(tx, ty).begin());
    }
  }
  return out;
}

std::optional<Patch> apply_step(const Patch& in, const FlipStep&) {
  const int w = in.mask.width();
  const int h = in.mask.height();
  Patch out{RgbImage(w, h, 0), BinaryMask(w, h, 0)};
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      out.mask.at(w - 1 - x, y) = in.mask.at(x, y);
      const auto src = in.image.pixel(x, y);
      std::copy(src.begin(), src.end(), out.image.pixel(w - 1 - x, y).begin());
    }
  }
  return out;
}

std::optional<Patch> apply_step(const Patch& in, const BrightnessStep& step) {
  Patch out = in;
  for (int y = 0; y < in.mask.height(); ++y) {
    for (int x = 0; x < in.mask.width(); ++x) {
      if (in.mask.at(x, y) == 0) continue;
      for (auto& v : out.image.pixel(x, y)) v = round_channel(v * step.factor);
    }
  }
  return out;
}

}  // namespace

AugmentResult apply_plan(const RgbImage& image, const BinaryMask& mask,
                         const AugmentPlan& plan) {
  if (!image.same_dims(mask)) {
    throw DimensionMismatch("object image and mask patches differ in size");
  }
  Patch current{image, BinaryMask(mask.width(), mask.height(), 0)};
  // Any nonzero mask value counts as set; image pixels outside it are
  // cleared so the output is zero wherever its mask is.
  for (std::size_t i = 0; i < mask.pixel_count(); ++i) {
    const bool set = mask.data()[i] != 0;
    current.mask.data()[i] = set;
    if (!set) {
      for (int c = 0; c < 3; ++c) current.image.data()[3 * i + c] = 0;
    }
  }

  AugmentResult result;
  result.applied.reserve(plan.steps.size());
  for (const AugmentStep& step : plan.steps) {
    std::optional<Patch> next = std::visit(
        [&](const auto& s) { return apply_step(current, s); }, step);
    const bool usable = next && count_set(next->mask) > 0;
    result.applied.push_back(usable);
    if (usable) current = std::move(*next);
  }
  result.image = std::move(current.image);
  result.mask = std::move(current.mask);
  return result;
}

}  // namespace objectaug
