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

#ifndef OBJECTAUG_PNG_CODEC_HPP_
#define OBJECTAUG_PNG_CODEC_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "objectaug/raster.hpp"

namespace objectaug {

// Decodes any 8/16-bit PNG into 8-bit RGB (palette expanded, alpha dropped).
RgbImage decode_rgb_png(std::span<const std::uint8_t> bytes);

// Decodes a single-channel PNG to raw sample values. Palette images yield
// their palette indices, never the palette colors. Throws DecodeError for
// multi-channel or 16-bit input.
LabelMap decode_index_png(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_png(const RgbImage& image);
std::vector<std::uint8_t> encode_png(const LabelMap& gray);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes);

}  // namespace objectaug

#endif  // OBJECTAUG_PNG_CODEC_HPP_
