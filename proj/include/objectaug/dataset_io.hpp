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

#ifndef OBJECTAUG_DATASET_IO_HPP_
#define OBJECTAUG_DATASET_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>

#include "objectaug/raster.hpp"

namespace objectaug {

using CategoryId = std::uint8_t;
using CategorySet = std::set<CategoryId>;

// An RGB image and its semantic mask, same width and height.
struct LabeledSample {
  std::string id;
  RgbImage image;
  LabelMap mask;

  friend bool operator==(const LabeledSample&, const LabeledSample&) = default;
};

// Per-category object counts and, optionally, prior per-category scores.
// Background and ignore ids never appear as keys.
struct CategoryStats {
  std::map<CategoryId, std::size_t> counts;
  std::optional<std::map<CategoryId, double>> scores;
};

// Checks the sample invariants. `known` restricts the foreground ids; when
// absent every id in 1..254 is accepted.
void validate_sample(const LabeledSample& sample,
                     const std::optional<CategorySet>& known = std::nullopt);

// Reads a PNG image/mask pair. The sample id is the image file stem.
// Throws DecodeError, DimensionMismatch or UnknownLabel.
LabeledSample load_sample(const std::filesystem::path& image_path,
                          const std::filesystem::path& mask_path,
                          const std::optional<CategorySet>& known =
                              std::nullopt);

// Counts connected objects per category whose area is at least `min_area`.
CategoryStats scan_category_stats(std::span<const LabelMap> masks,
                                  std::size_t min_area);

// Parses `category_id score` lines; `#` starts a comment. Scores must lie
// in (0, 1].
std::map<CategoryId, double> load_scores(const std::filesystem::path& path);
std::map<CategoryId, double> parse_scores(std::string_view text);

// Writes `<out_dir>/images/<id>.png` (RGB) and `<out_dir>/masks/<id>.png`
// (8-bit gray). Returns the two paths.
std::pair<std::filesystem::path, std::filesystem::path> write_sample(
    const LabeledSample& sample, const std::filesystem::path& out_dir);

}  // namespace objectaug

#endif  // OBJECTAUG_DATASET_IO_HPP_
