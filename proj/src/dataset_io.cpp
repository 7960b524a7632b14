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

#include "objectaug/dataset_io.hpp"

#include <charconv>
#include <sstream>
#include <system_error>

#include "objectaug/parsing.hpp"
#include "objectaug/png_codec.hpp"

namespace objectaug {
namespace fs = std::filesystem;

void validate_sample(const LabeledSample& sample,
                     const std::optional<CategorySet>& known) {
  if (sample.image.width() < 1 || sample.image.height() < 1) {
    throw DimensionMismatch("sample '" + sample.id + "' has an empty image");
  }
  if (!sample.image.same_dims(sample.mask)) {
    std::ostringstream msg;
    msg << "sample '" << sample.id << "': image is " << sample.image.width()
        << "x" << sample.image.height() << " but mask is "
        << sample.mask.width() << "x" << sample.mask.height();
    throw DimensionMismatch(msg.str());
  }
  if (!known) return;
  for (std::uint8_t v : sample.mask.data()) {
    if (v != kBackgroundLabel && v != kIgnoreLabel && !known->contains(v)) {
      throw UnknownLabel("sample '" + sample.id + "': mask value " +
                         std::to_string(v) + " is not a declared category");
    }
  }
}

LabeledSample load_sample(const fs::path& image_path, const fs::path& mask_path,
                          const std::optional<CategorySet>& known) {
  LabeledSample sample;
  sample.id = image_path.stem().string();
  try {
    sample.image = decode_rgb_png(read_file(image_path));
  } catch (const DecodeError& e) {
    throw DecodeError(image_path.string() + ": " + e.what());
  }
  try {
    sample.mask = decode_index_png(read_file(mask_path));
  } catch (const DecodeError& e) {
    throw DecodeError(mask_path.string() + ": " + e.what());
  }
  validate_sample(sample, known);
  return sample;
}

CategoryStats scan_category_stats(std::span<const LabelMap> masks,
                                  std::size_t min_area) {
  if (min_area < 1) throw ValidationError("min_area must be >= 1");
  CategoryStats stats;
  for (const LabelMap& mask : masks) {
    for (const ObjectInstance& inst : split_mask(mask, min_area).instances) {
      ++stats.counts[inst.category];
    }
  }
  return stats;
}

std::map<CategoryId, double> parse_scores(std::string_view text) {
  std::map<CategoryId, double> scores;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string id_text, score_text, extra;
    if (!(fields >> id_text)) continue;
    const auto fail = [&](const std::string& why) {
      return ParseError("scores line " + std::to_string(line_no) + ": " + why);
    };
    if (!(fields >> score_text) || (fields >> extra)) {
      throw fail("expected 'category_id score'");
    }
    int id = -1;
    auto [id_end, id_ec] =
        std::from_chars(id_text.data(), id_text.data() + id_text.size(), id);
    if (id_ec != std::errc() || id_end != id_text.data() + id_text.size() ||
        id < 0 || id > 255) {
      throw fail("bad category id '" + id_text + "'");
    }
    if (id == kBackgroundLabel || id == kIgnoreLabel) {
      throw fail("category id " + id_text + " is reserved");
    }
    double score = 0.0;
    auto [s_end, s_ec] = std::from_chars(
        score_text.data(), score_text.data() + score_text.size(), score);
    if (s_ec != std::errc() ||
        s_end != score_text.data() + score_text.size()) {
      throw fail("bad score '" + score_text + "'");
    }
    if (!(score > 0.0 && score <= 1.0)) {
      throw ScoreOutOfRange("scores line " + std::to_string(line_no) +
                            ": score " + score_text + " not in (0, 1]");
    }
    if (!scores.emplace(static_cast<CategoryId>(id), score).second) {
      throw fail("duplicate category id " + id_text);
    }
  }
  return scores;
}

std::map<CategoryId, double> load_scores(const fs::path& path) {
  const auto bytes = read_file(path);
  return parse_scores(
      std::string_view(reinterpret_cast<const char*>(bytes.data()),
                       bytes.size()));
}

std::pair<fs::path, fs::path> write_sample(const LabeledSample& sample,
                                           const fs::path& out_dir) {
  validate_sample(sample);
  const fs::path image_dir = out_dir / "images";
  const fs::path mask_dir = out_dir / "masks";
  std::error_code ec;
  fs::create_directories(image_dir, ec);
  if (!ec) fs::create_directories(mask_dir, ec);
  if (ec) {
    throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
  }
  fs::path image_path = image_dir / (sample.id + ".png");
  fs::path mask_path = mask_dir / (sample.id + ".png");
  write_file(image_path, encode_png(sample.image));
  write_file(mask_path, encode_png(sample.mask));
  return {std::move(image_path), std::move(mask_path)};
}

}  // namespace objectaug
