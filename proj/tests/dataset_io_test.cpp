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

#include <algorithm>
#include <fstream>
#include <random>

#include "doctest.h"
#include "objectaug/dataset_io.hpp"
#include "objectaug/png_codec.hpp"
#include "support/oracles.hpp"
#include "support/synthetic.hpp"

namespace objectaug {
namespace {

using testing::TempDir;

void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

void write_pair(const TempDir& dir, const RgbImage& img, const LabelMap& mask) {
  write_file(dir.path() / "img.png", encode_png(img));
  write_file(dir.path() / "mask.png", encode_png(mask));
}

TEST_CASE("load_sample reads an all-background pair") {
  TempDir dir;
  write_pair(dir, RgbImage(2, 2, 7), LabelMap(2, 2, 0));
  const LabeledSample s =
      load_sample(dir.path() / "img.png", dir.path() / "mask.png");
  CHECK(s.id == "img");
  CHECK(s.image.width() == 2);
  CHECK(std::all_of(s.mask.data().begin(), s.mask.data().end(),
                    [](auto v) { return v == 0; }));
}

TEST_CASE("load_sample rejects mismatched dimensions") {
  TempDir dir;
  write_pair(dir, RgbImage(2, 2), LabelMap(3, 3));
  CHECK_THROWS_AS(load_sample(dir.path() / "img.png", dir.path() / "mask.png"),
                  DimensionMismatch);
}

TEST_CASE("load_sample reads palette masks by index") {
  TempDir dir;
  // Index 15 maps to a colour whose channels are nowhere near 15.
  std::vector<std::array<std::uint8_t, 3>> palette(256, {0, 0, 0});
  palette[15] = {192, 128, 128};
  palette[255] = {224, 224, 192};
  const std::vector<std::uint8_t> indices = {15, 0, 255, 3};
  write_file(dir.path() / "mask.png",
             testing::oracle_palette_png(2, 2, indices, palette));
  write_file(dir.path() / "img.png", encode_png(RgbImage(2, 2)));
  const LabeledSample s =
      load_sample(dir.path() / "img.png", dir.path() / "mask.png");
  CHECK(s.mask.at(0, 0) == 15);
  CHECK(s.mask.at(1, 0) == 0);
  CHECK(s.mask.at(0, 1) == 255);
  CHECK(s.mask.at(1, 1) == 3);
}

TEST_CASE("load_sample reports corrupt files and unknown labels") {
  TempDir dir;
  write_text(dir.path() / "img.png", "definitely not a png");
  write_file(dir.path() / "mask.png", encode_png(LabelMap(2, 2)));
  CHECK_THROWS_AS(load_sample(dir.path() / "img.png", dir.path() / "mask.png"),
                  DecodeError);

  // An RGB file cannot be a mask.
  write_file(dir.path() / "img.png", encode_png(RgbImage(2, 2)));
  write_file(dir.path() / "mask.png", encode_png(RgbImage(2, 2)));
  CHECK_THROWS_AS(load_sample(dir.path() / "img.png", dir.path() / "mask.png"),
                  DecodeError);

  LabelMap mask(2, 2, 0);
  mask.at(1, 1) = 9;
  write_file(dir.path() / "mask.png", encode_png(mask));
  CHECK_THROWS_AS(load_sample(dir.path() / "img.png", dir.path() / "mask.png",
                              CategorySet{1, 2}),
                  UnknownLabel);
  mask.at(1, 1) = 255;
  write_file(dir.path() / "mask.png", encode_png(mask));
  CHECK_NOTHROW(load_sample(dir.path() / "img.png", dir.path() / "mask.png",
                            CategorySet{1, 2}));
}

TEST_CASE("write_sample round-trips bit-exactly") {
  std::mt19937_64 gen(11);
  TempDir dir;
  for (int trial = 0; trial < 20; ++trial) {
    const int w = 1 + static_cast<int>(gen() % 40);
    const int h = 1 + static_cast<int>(gen() % 40);
    LabeledSample s{"s" + std::to_string(trial), testing::random_image(w, h, gen),
                    LabelMap(w, h)};
    for (auto& v : s.mask.data()) v = static_cast<std::uint8_t>(gen() % 6);
    s.mask.at(0, 0) = kIgnoreLabel;
    const auto [ip, mp] = write_sample(s, dir.path());
    const LabeledSample back = load_sample(ip, mp);
    CHECK(back == s);
    CHECK(back.mask.at(0, 0) == kIgnoreLabel);
  }
}

TEST_CASE("write_sample handles a 1x1 sample") {
  TempDir dir;
  LabeledSample s{"tiny", RgbImage(1, 1, 200), LabelMap(1, 1, 4)};
  const auto [ip, mp] = write_sample(s, dir.path());
  CHECK(load_sample(ip, mp) == s);
}

TEST_CASE("scan_category_stats counts components above min_area") {
  LabelMap blob(6, 6, 0);
  for (int y = 1; y <= 2; ++y)
    for (int x = 1; x <= 2; ++x) blob.at(x, y) = 3;
  const std::vector<LabelMap> one = {blob};
  CHECK(scan_category_stats(one, 1).counts ==
        std::map<CategoryId, std::size_t>{{3, 1}});

  LabelMap two(8, 8, 0);
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 2; ++x) two.at(x, y) = 1;
  two.at(6, 6) = 1;
  // Oracle: union-find areas filtered by min_area.
  std::size_t expected = 0;
  for (const auto& [cat, area] : testing::oracle_component_areas(two, true)) {
    if (cat == 1 && area >= 2) ++expected;
  }
  REQUIRE(expected == 1);
  const std::vector<LabelMap> masks = {two};
  CHECK(scan_category_stats(masks, 2).counts ==
        std::map<CategoryId, std::size_t>{{1, expected}});

  CHECK(scan_category_stats(std::vector<LabelMap>{}, 1).counts.empty());
}

TEST_CASE("scan_category_stats is order invariant and monotone in min_area") {
  std::mt19937_64 gen(5);
  std::vector<LabelMap> masks;
  for (int i = 0; i < 12; ++i) {
    masks.push_back(testing::random_label_map(32, 24, gen, 5, 4, true));
  }
  const auto base = scan_category_stats(masks, 1).counts;
  std::vector<LabelMap> shuffled = masks;
  std::shuffle(shuffled.begin(), shuffled.end(), gen);
  CHECK(scan_category_stats(shuffled, 1).counts == base);

  auto previous = base;
  for (std::size_t area : {2u, 5u, 20u, 80u}) {
    const auto counts = scan_category_stats(masks, area).counts;
    for (const auto& [cat, n] : counts) CHECK(n <= previous[cat]);
    previous = counts;
  }
}

TEST_CASE("load_scores parses, validates and allows comments") {
  TempDir dir;
  write_text(dir.path() / "s.txt", "1 0.572\n2 0.843");
  const auto scores = load_scores(dir.path() / "s.txt");
  CHECK(scores.size() == 2);
  CHECK(scores.at(1) == 0.572);
  CHECK(scores.at(2) == 0.843);

  write_text(dir.path() / "s.txt", "1 1.5\n");
  CHECK_THROWS_AS(load_scores(dir.path() / "s.txt"), ScoreOutOfRange);
  write_text(dir.path() / "s.txt", "");
  CHECK(load_scores(dir.path() / "s.txt").empty());

  CHECK(parse_scores("# header\n\n3 0.5  # trailing\n").at(3) == 0.5);
  CHECK_THROWS_AS(parse_scores("3 abc"), ParseError);
  CHECK_THROWS_AS(parse_scores("3"), ParseError);
  CHECK_THROWS_AS(parse_scores("0 0.4"), ParseError);
  CHECK_THROWS_AS(parse_scores("1 0.4\n1 0.5"), ParseError);
  CHECK_THROWS_AS(parse_scores("4 0"), ScoreOutOfRange);
}

}  // namespace
}  // namespace objectaug
