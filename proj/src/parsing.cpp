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

#include "objectaug/parsing.hpp"

#include <algorithm>
#include <cmath>

namespace objectaug {

ParsedMask split_mask(const LabelMap& mask, std::size_t min_area) {
  const int w = mask.width();
  const int h = mask.height();
  ParsedMask parsed;
  parsed.background = BinaryMask(w, h, 1);

  std::vector<std::uint8_t> visited(mask.pixel_count(), 0);
  std::vector<int> stack;
  std::vector<int> component;
  for (int start = 0; start < w * h; ++start) {
    const std::uint8_t label = mask.data()[start];
    if (visited[start] || label == kBackgroundLabel || label == kIgnoreLabel) {
      continue;
    }
    component.clear();
    stack.push_back(start);
    visited[start] = 1;
    Rect box{w, h, -1, -1};
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      component.push_back(p);
      const int px = p % w;
      const int py = p / w;
      box.x0 = std::min(box.x0, px);
      box.y0 = std::min(box.y0, py);
      box.x1 = std::max(box.x1, px);
      box.y1 = std::max(box.y1, py);
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          const int nx = px + dx;
          const int ny = py + dy;
          if (!mask.in_bounds(nx, ny)) continue;
          const int q = ny * w + nx;
          if (!visited[q] && mask.data()[q] == label) {
            visited[q] = 1;
            stack.push_back(q);
          }
        }
      }
    }
    if (component.size() < min_area) continue;

    ObjectInstance inst;
    inst.mask = BinaryMask(w, h, 0);
    inst.category = label;
    inst.bbox = box;
    inst.area = component.size();
    for (int p : component) {
      inst.mask.data()[p] = 1;
      parsed.background.data()[p] = 0;
    }
    parsed.instances.push_back(std::move(inst));
  }
  return parsed;
}

RgbImage apply_mask(const RgbImage& image, const BinaryMask& mask) {
  if (!image.same_dims(mask)) {
    throw DimensionMismatch("image and mask dimensions differ");
  }
  RgbImage out(image.width(), image.height(), 0);
  const auto src = image.data();
  const auto m = mask.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) {
      dst[3 * i] = src[3 * i];
      dst[3 * i + 1] = src[3 * i + 1];
      dst[3 * i + 2] = src[3 * i + 2];
    }
  }
  return out;
}

RgbImage extract_object(const RgbImage& image, const ObjectInstance& inst) {
  return apply_mask(image, inst.mask);
}

namespace {

struct Span1d {
  int lo;
  int hi;
};

// Centre a window of `target` pixels on [lo, hi], then shift it into
// [0, extent).
Span1d place_window(int lo, int hi, int target, int extent) {
  if (target >= extent) return {0, extent - 1};
  const int center = (lo + hi) / 2;  // both non-negative: floor
  int start = center - (target - 1) / 2;
  int end = start + target - 1;
  if (start < 0) {
    end -= start;
    start = 0;
  } else if (end > extent - 1) {
    start -= end - (extent - 1);
    end = extent - 1;
  }
  return {start, end};
}

int scaled_extent(double margin, int size) {
  // The epsilon keeps products such as 1.1 * 10 from rounding up to 12.
  return static_cast<int>(std::ceil(margin * size - 1e-9));
}

}  // namespace

CropSpec compute_crop(const ObjectInstance& inst, std::size_t index,
                      double margin, int image_width, int image_height) {
  if (!(margin >= 1.0)) throw ValidationError("crop margin must be >= 1.0");
  if (inst.bbox.empty() || !Rect{0, 0, image_width - 1, image_height - 1}
                               .contains(inst.bbox)) {
    throw DimensionMismatch("instance bbox lies outside the image");
  }
  const Span1d xs =
      place_window(inst.bbox.x0, inst.bbox.x1,
                   scaled_extent(margin, inst.bbox.width()), image_width);
  const Span1d ys =
      place_window(inst.bbox.y0, inst.bbox.y1,
                   scaled_extent(margin, inst.bbox.height()), image_height);
  return CropSpec{Rect{xs.lo, ys.lo, xs.hi, ys.hi}, index};
}

std::pair<RgbImage, LabelMap> crop_patch(const RgbImage& image,
                                         const LabelMap& mask,
                                         const CropSpec& crop_spec) {
  if (!image.same_dims(mask)) {
    throw DimensionMismatch("image and mask dimensions differ");
  }
  return {crop(image, crop_spec.rect), crop(mask, crop_spec.rect)};
}

}  // namespace objectaug
