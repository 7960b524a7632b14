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
#include <random>

#include "doctest.h"
#include "objectaug/parsing.hpp"
#include "support/oracles.hpp"
#include "support/synthetic.hpp"

namespace objectaug {
namespace {

std::vector<std::size_t> sorted_areas(const ParsedMask& parsed) {
  std::vector<std::size_t> out;
  for (const auto& inst : parsed.instances) out.push_back(inst.area);
  std::sort(out.begin(), out.end());
  return out;
}

TEST_CASE("split_mask on an empty mask yields only background") {
  const ParsedMask parsed = split_mask(LabelMap(4, 4, 0), 1);
  CHECK(parsed.instances.empty());
  CHECK(count_set(parsed.background) == 16);
}

TEST_CASE("split_mask finds a single block") {
  LabelMap m(4, 4, 0);
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 2; ++x) m.at(x, y) = 1;
  const ParsedMask parsed = split_mask(m, 1);
  REQUIRE(parsed.instances.size() == 1);
  const ObjectInstance& inst = parsed.instances[0];
  CHECK(inst.area == 4);
  CHECK(inst.bbox == Rect{0, 0, 1, 1});
  CHECK(inst.category == 1);
}

TEST_CASE("split_mask uses 8-connectivity") {
  LabelMap m(3, 3, 0);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  CHECK(testing::oracle_component_areas(m, false).size() == 2);
  CHECK(testing::oracle_component_areas(m, true).size() == 1);
  CHECK(split_mask(m, 1).instances.size() == 1);
}

TEST_CASE("split_mask separates categories and drops small components") {
  LabelMap m(6, 2, 0);
  m.at(0, 0) = 1;
  m.at(1, 0) = 2;  // touching, different category
  m.at(4, 1) = 2;
  m.at(5, 1) = 2;
  m.at(3, 0) = kIgnoreLabel;
  ParsedMask parsed = split_mask(m, 1);
  CHECK(parsed.instances.size() == 3);
  parsed = split_mask(m, 2);
  REQUIRE(parsed.instances.size() == 1);
  CHECK(parsed.instances[0].category == 2);
  // Small components and ignore pixels go to the background plane; the
  // source mask itself is untouched.
  CHECK(parsed.background.at(0, 0) == 1);
  CHECK(parsed.background.at(3, 0) == 1);
  CHECK(m.at(0, 0) == 1);
}

TEST_CASE("split_mask matches the union-find oracle and partitions") {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int w = 8 + static_cast<int>(gen() % 40);
    const int h = 8 + static_cast<int>(gen() % 40);
    const LabelMap m = testing::random_label_map(w, h, gen, 6, 3, trial % 2);
    const std::size_t min_area = 1 + gen() % 10;
    const ParsedMask parsed = split_mask(m, min_area);

    std::vector<std::size_t> expected;
    for (const auto& [cat, area] : testing::oracle_component_areas(m, true)) {
      if (area >= min_area) expected.push_back(area);
    }
    std::sort(expected.begin(), expected.end());
    CHECK(sorted_areas(parsed) == expected);

    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        int total = parsed.background.at(x, y);
        for (const auto& inst : parsed.instances) total += inst.mask.at(x, y);
        REQUIRE(total == 1);
      }
    }
    for (const auto& inst : parsed.instances) {
      CHECK(count_set(inst.mask) == inst.area);
      CHECK(inst.category != kBackgroundLabel);
      CHECK(inst.category != kIgnoreLabel);
      Rect tight{w, h, -1, -1};
      for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
          if (!inst.mask.at(x, y)) continue;
          CHECK(m.at(x, y) == inst.category);
          tight = {std::min(tight.x0, x), std::min(tight.y0, y),
                   std::max(tight.x1, x), std::max(tight.y1, y)};
        }
      }
      CHECK(tight == inst.bbox);
    }
  }
}

TEST_CASE("extract_object keeps only the object's pixels") {
  RgbImage img(3, 3, 255);
  ObjectInstance inst;
  inst.mask = BinaryMask(3, 3, 0);
  inst.mask.at(1, 2) = 1;
  const RgbImage layer = extract_object(img, inst);
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 3; ++x) {
      const std::uint8_t expect = (x == 1 && y == 2) ? 255 : 0;
      for (int c = 0; c < 3; ++c) CHECK(layer.at(x, y, c) == expect);
    }
  }
  inst.mask = BinaryMask(2, 2, 1);
  CHECK_THROWS_AS(extract_object(img, inst), DimensionMismatch);
}

TEST_CASE("object layers plus background layer sum to the image") {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 30; ++trial) {
    const RgbImage img = testing::random_image(8, 8, gen);
    LabelMap m(8, 8);
    for (auto& v : m.data()) v = static_cast<std::uint8_t>(gen() % 4);
    const ParsedMask parsed = split_mask(m, 1);
    std::vector<int> sum(img.data().size(), 0);
    auto add = [&](const RgbImage& layer) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += layer.data()[i];
    };
    for (const auto& inst : parsed.instances) add(extract_object(img, inst));
    add(apply_mask(img, parsed.background));
    for (std::size_t i = 0; i < sum.size(); ++i) {
      REQUIRE(sum[i] == img.data()[i]);
    }
  }
}

// Independent window placement: among every start that keeps the window
// inside the image, take the one nearest the centred start.
Rect oracle_crop(const Rect& box, double margin, int w, int h) {
  auto axis = [&](int lo, int hi, int extent) -> std::pair<int, int> {
    int target = 0;
    while (target < margin * (hi - lo + 1) - 1e-9) ++target;
    if (target >= extent) return {0, extent - 1};
    const int ideal = (lo + hi) / 2 - (target - 1) / 2;
    int best = 0;
    for (int s = 0; s + target <= extent; ++s) {
      if (std::abs(s - ideal) < std::abs(best - ideal)) best = s;
    }
    return {best, best + target - 1};
  };
  const auto [x0, x1] = axis(box.x0, box.x1, w);
  const auto [y0, y1] = axis(box.y0, box.y1, h);
  return {x0, y0, x1, y1};
}

ObjectInstance box_instance(const Rect& box, int w, int h) {
  ObjectInstance inst;
  inst.mask = BinaryMask(w, h, 0);
  for (int y = box.y0; y <= box.y1; ++y)
    for (int x = box.x0; x <= box.x1; ++x) inst.mask.at(x, y) = 1;
  inst.bbox = box;
  inst.area = static_cast<std::size_t>(box.width()) * box.height();
  inst.category = 1;
  return inst;
}

TEST_CASE("compute_crop centres and clamps") {
  const Rect box{4, 4, 7, 7};
  REQUIRE(oracle_crop(box, 1.5, 16, 16) == Rect{3, 3, 8, 8});
  CHECK(compute_crop(box_instance(box, 16, 16), 0, 1.5, 16, 16).rect ==
        Rect{3, 3, 8, 8});
  CHECK(compute_crop(box_instance(box, 16, 16), 0, 1.0, 16, 16).rect == box);

  const Rect full{0, 0, 9, 6};
  CHECK(compute_crop(box_instance(full, 10, 7), 0, 2.5, 10, 7).rect == full);
  CHECK_THROWS_AS(compute_crop(box_instance(box, 16, 16), 0, 0.9, 16, 16),
                  ValidationError);
}

TEST_CASE("compute_crop agrees with the placement oracle and contains bbox") {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 2000; ++trial) {
    const int w = 1 + static_cast<int>(gen() % 40);
    const int h = 1 + static_cast<int>(gen() % 40);
    int xa = static_cast<int>(gen() % w), xb = static_cast<int>(gen() % w);
    int ya = static_cast<int>(gen() % h), yb = static_cast<int>(gen() % h);
    const Rect box{std::min(xa, xb), std::min(ya, yb), std::max(xa, xb),
                   std::max(ya, yb)};
    const double margin = 1.0 + (gen() % 300) / 100.0;
    const CropSpec crop_spec =
        compute_crop(box_instance(box, w, h), 7, margin, w, h);
    CHECK(crop_spec.source_object == 7);
    CHECK(crop_spec.rect.contains(box));
    CHECK(Rect{0, 0, w - 1, h - 1}.contains(crop_spec.rect));
    CHECK(crop_spec.rect == oracle_crop(box, margin, w, h));
  }
}

TEST_CASE("crop_patch copies aligned sub-rectangles") {
  std::mt19937_64 gen(29);
  const RgbImage img = testing::random_image(12, 9, gen);
  const LabelMap m = testing::random_label_map(12, 9, gen);

  auto [full_img, full_mask] = crop_patch(img, m, CropSpec{img.bounds(), 0});
  CHECK(full_img == img);
  CHECK(full_mask == m);

  auto [px_img, px_mask] = crop_patch(img, m, CropSpec{Rect{0, 0, 0, 0}, 0});
  CHECK(px_img.width() == 1);
  CHECK(px_img.at(0, 0, 2) == img.at(0, 0, 2));
  CHECK(px_mask.at(0, 0) == m.at(0, 0));

  for (int trial = 0; trial < 200; ++trial) {
    const int x0 = static_cast<int>(gen() % 12), y0 = static_cast<int>(gen() % 9);
    const Rect r{x0, y0, x0 + static_cast<int>(gen() % (12 - x0)),
                 y0 + static_cast<int>(gen() % (9 - y0))};
    auto [pi, pm] = crop_patch(img, m, CropSpec{r, 0});
    RgbImage back_img(12, 9, 0);
    LabelMap back_mask(12, 9, 0);
    paste(back_img, r, pi);
    paste(back_mask, r, pm);
    for (int y = r.y0; y <= r.y1; ++y) {
      for (int x = r.x0; x <= r.x1; ++x) {
        REQUIRE(back_mask.at(x, y) == m.at(x, y));
        for (int c = 0; c < 3; ++c) REQUIRE(back_img.at(x, y, c) == img.at(x, y, c));
      }
    }
  }
}

}  // namespace
}  // namespace objectaug
