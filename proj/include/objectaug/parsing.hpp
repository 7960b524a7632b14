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

#ifndef OBJECTAUG_PARSING_HPP_
#define OBJECTAUG_PARSING_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "objectaug/raster.hpp"

namespace objectaug {

// One 8-connected region of a single foreground category.
struct ObjectInstance {
  BinaryMask mask;  // full-image plane
  std::uint8_t category = 0;
  Rect bbox;  // tight
  std::size_t area = 0;
};

// The object plus background decomposition of a semantic mask. Instance
// planes and the background plane partition the image: every pixel is set
// in exactly one of them. Ignore pixels and components smaller than
// `min_area` belong to the background plane.
struct ParsedMask {
  std::vector<ObjectInstance> instances;
  BinaryMask background;
};

// Per-object crop window, clamped to the image and containing the object's
// bounding box.
struct CropSpec {
  Rect rect;
  std::size_t source_object = 0;
};

// Instances are ordered by their first pixel in raster order.
ParsedMask split_mask(const LabelMap& mask, std::size_t min_area);

// Zeroes every pixel of `image` outside `mask`.
RgbImage apply_mask(const RgbImage& image, const BinaryMask& mask);

// The object layer: image pixels under the instance mask, zero elsewhere.
RgbImage extract_object(const RgbImage& image, const ObjectInstance& inst);

// Window of ceil(margin * bbox size) centred on the bbox, shifted minimally
// to lie inside the image; the whole image along an axis that is too small.
CropSpec compute_crop(const ObjectInstance& inst, std::size_t index,
                      double margin, int image_width, int image_height);

std::pair<RgbImage, LabelMap> crop_patch(const RgbImage& image,
                                         const LabelMap& mask,
                                         const CropSpec& crop);

}  // namespace objectaug

#endif  // OBJECTAUG_PARSING_HPP_
