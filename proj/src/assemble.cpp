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

#include "objectaug/assemble.hpp"

#include <string>

namespace objectaug {

UnionMasks union_and_artifact(const BinaryMask& original,
                              const BinaryMask& augmented) {
  if (!original.same_dims(augmented)) {
    throw DimensionMismatch("original and augmented masks differ in size");
  }
  const int w = original.width();
  const int h = original.height();
  UnionMasks out{BinaryMask(w, h, 0), BinaryMask(w, h, 0)};
  for (std::size_t i = 0; i < original.pixel_count(); ++i) {
    const bool o = original.data()[i] != 0;
    const bool a = augmented.data()[i] != 0;
    out.united.data()[i] = o || a;
    out.artifact.data()[i] = o && !a;
  }
  return out;
}

namespace {

void check_inputs(const AssemblyInputs& in) {
  const RgbImage& ref = in.original_image;
  if (!ref.same_dims(in.original_mask) || !ref.same_dims(in.object_mask) ||
      !ref.same_dims(in.augmented_image) || !ref.same_dims(in.augmented_mask) ||
      !ref.same_dims(in.inpainted)) {
    throw InvariantViolation("assembly planes differ in size");
  }
  if (in.category == kBackgroundLabel || in.category == kIgnoreLabel) {
    throw InvariantViolation("assembly category " +
                             std::to_string(in.category) + " is reserved");
  }
  for (std::size_t i = 0; i < ref.pixel_count(); ++i) {
    if (in.object_mask.data()[i] &&
        in.original_mask.data()[i] != in.category) {
      throw InvariantViolation(
          "object footprint covers a pixel not labelled with its category");
    }
    if (!in.augmented_mask.data()[i]) {
      for (int c = 0; c < 3; ++c) {
        if (in.augmented_image.data()[3 * i + c] != 0) {
          throw InvariantViolation(
              "augmented image is nonzero outside the augmented mask");
        }
      }
    }
  }
}

}  // namespace

AssembledPatch compose_patch(const AssemblyInputs& in) {
  check_inputs(in);
  const UnionMasks masks = union_and_artifact(in.object_mask, in.augmented_mask);
  AssembledPatch out{in.original_image, in.original_mask};
  for (std::size_t i = 0; i < masks.united.pixel_count(); ++i) {
    if (!masks.united.data()[i]) continue;
    const RgbImage& source =
        in.augmented_mask.data()[i] ? in.augmented_image : in.inpainted;
    for (int c = 0; c < 3; ++c) {
      out.image.data()[3 * i + c] = source.data()[3 * i + c];
    }
    out.mask.data()[i] =
        in.augmented_mask.data()[i] ? in.category : kBackgroundLabel;
  }
  return out;
}

void paste_patch(RgbImage& image, LabelMap& mask, const CropSpec& crop,
                 const RgbImage& patch_image, const LabelMap& patch_mask) {
  if (!image.same_dims(mask) || !patch_image.same_dims(patch_mask)) {
    throw DimensionMismatch("image/mask planes differ in size");
  }
  paste(image, crop.rect, patch_image);
  paste(mask, crop.rect, patch_mask);
}

}  // namespace objectaug
