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

#ifndef OBJECTAUG_FILL_HPP_
#define OBJECTAUG_FILL_HPP_

#include <string_view>
#include <variant>

#include "objectaug/inpaint_client.hpp"
#include "objectaug/random.hpp"
#include "objectaug/raster.hpp"

namespace objectaug {

// Hole pixels become zero (a CutOut-style blank).
struct NoFill {};

// Hole pixels get independent uniform values in [0, 255] per channel.
struct NoiseFill {};

// Harmonic fill: hole pixels relax towards the mean of their 4-neighbours
// with the surrounding known pixels held fixed.
struct DiffusionFill {
  int iterations = 64;
};

using FillStrategy = std::variant<NoFill, NoiseFill, DiffusionFill, ExternalFill>;

std::string_view strategy_name(const FillStrategy& strategy);

// Throws ValidationError for iterations < 1 or a malformed endpoint.
void validate_strategy(const FillStrategy& strategy);

// Square-element (L-infinity) dilation, clipped at the borders.
BinaryMask dilate_mask(const BinaryMask& mask, int radius);

// Repairs the pixels under `hole`. Pixels outside the hole are copied from
// `patch` unchanged for every strategy.
RgbImage fill_patch(const RgbImage& patch, const BinaryMask& hole,
                    const FillStrategy& strategy, Rng& rng);

// Fills the dilated object footprint from the surrounding background.
RgbImage inpaint_background(const RgbImage& patch,
                            const BinaryMask& object_mask, int dilation_radius,
                            const FillStrategy& strategy, Rng& rng);

}  // namespace objectaug

#endif  // OBJECTAUG_FILL_HPP_
