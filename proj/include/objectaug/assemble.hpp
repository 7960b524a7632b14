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

#ifndef OBJECTAUG_ASSEMBLE_HPP_
#define OBJECTAUG_ASSEMBLE_HPP_

#include <cstdint>

#include "objectaug/parsing.hpp"
#include "objectaug/raster.hpp"

namespace objectaug {

// Everything needed to put one augmented object back into its crop. All
// planes share the crop's dimensions.
struct AssemblyInputs {
  const RgbImage& original_image;      // crop of the current image
  const LabelMap& original_mask;       // crop of the current semantic mask
  const BinaryMask& object_mask;       // object footprint before augmenting
  const RgbImage& augmented_image;     // zero outside augmented_mask
  const BinaryMask& augmented_mask;
  const RgbImage& inpainted;           // background with the object filled
  std::uint8_t category = 0;
};

struct UnionMasks {
  BinaryMask united;    // original | augmented
  BinaryMask artifact;  // original & ~augmented: uncovered footprint
};

struct AssembledPatch {
  RgbImage image;
  LabelMap mask;
};

UnionMasks union_and_artifact(const BinaryMask& original,
                              const BinaryMask& augmented);

// Per pixel, exactly one case applies:
//   outside the union  -> original image and label
//   augmented object   -> augmented pixel, label `category`
//   artifact           -> inpainted pixel, background label
// Throws InvariantViolation if the inputs break their documented contract.
AssembledPatch compose_patch(const AssemblyInputs& in);

// Replaces the crop region of `image` and `mask` with the patch planes.
void paste_patch(RgbImage& image, LabelMap& mask, const CropSpec& crop,
                 const RgbImage& patch_image, const LabelMap& patch_mask);

}  // namespace objectaug

#endif  // OBJECTAUG_ASSEMBLE_HPP_
