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

#ifndef OBJECTAUG_RASTER_HPP_
#define OBJECTAUG_RASTER_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "objectaug/errors.hpp"

namespace objectaug {

inline constexpr std::uint8_t kBackgroundLabel = 0;
inline constexpr std::uint8_t kIgnoreLabel = 255;

// Inclusive integer rectangle.
struct Rect {
  int x0 = 0;
  int y0 = 0;
  int x1 = -1;
  int y1 = -1;

  int width() const { return x1 - x0 + 1; }
  int height() const { return y1 - y0 + 1; }
  bool empty() const { return x1 < x0 || y1 < y0; }
  bool contains(int x, int y) const {
    return x >= x0 && x <= x1 && y >= y0 && y <= y1;
  }
  bool contains(const Rect& other) const {
    return other.x0 >= x0 && other.x1 <= x1 && other.y0 >= y0 &&
           other.y1 <= y1;
  }
  friend bool operator==(const Rect&, const Rect&) = default;
};

// Row-major, channel-interleaved 8-bit plane. The tag only separates
// otherwise identical layouts (label maps vs binary masks) at the type level.
template <int Channels, typename Tag>
class Raster {
 public:
  static constexpr int kChannels = Channels;

  Raster() = default;
  Raster(int width, int height, std::uint8_t fill = 0)
      : width_(width), height_(height) {
    if (width < 0 || height < 0) {
      throw DimensionMismatch("negative raster dimensions");
    }
    data_.assign(static_cast<std::size_t>(width) * height * Channels, fill);
  }
  Raster(int width, int height, std::vector<std::uint8_t> data)
      : width_(width), height_(height), data_(std::move(data)) {
    if (width < 0 || height < 0 ||
        data_.size() != static_cast<std::size_t>(width) * height * Channels) {
      throw DimensionMismatch("raster buffer does not match its dimensions");
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return data_.empty(); }
  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width_) * height_;
  }
  Rect bounds() const { return Rect{0, 0, width_ - 1, height_ - 1}; }
  bool in_bounds(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  std::uint8_t& at(int x, int y, int c = 0) { return data_[index(x, y, c)]; }
  std::uint8_t at(int x, int y, int c = 0) const {
    return data_[index(x, y, c)];
  }
  std::span<std::uint8_t, Channels> pixel(int x, int y) {
    return std::span<std::uint8_t, Channels>(&data_[index(x, y, 0)],
                                             Channels);
  }
  std::span<const std::uint8_t, Channels> pixel(int x, int y) const {
    return std::span<const std::uint8_t, Channels>(&data_[index(x, y, 0)],
                                                   Channels);
  }

  std::span<std::uint8_t> data() { return data_; }
  std::span<const std::uint8_t> data() const { return data_; }

  template <int C, typename T>
  bool same_dims(const Raster<C, T>& other) const {
    return width_ == other.width() && height_ == other.height();
  }

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  std::size_t index(int x, int y, int c) const {
    return (static_cast<std::size_t>(y) * width_ + x) * Channels + c;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> data_;
};

struct RgbTag {};
struct LabelTag {};
struct BinaryTag {};

using RgbImage = Raster<3, RgbTag>;
// Semantic mask: pixel value = category id.
using LabelMap = Raster<1, LabelTag>;
// Values are exactly 0 or 1.
using BinaryMask = Raster<1, BinaryTag>;

template <int C, typename T>
Raster<C, T> crop(const Raster<C, T>& src, const Rect& rect) {
  if (rect.empty() || !src.bounds().contains(rect)) {
    throw DimensionMismatch("crop rectangle outside raster bounds");
  }
  Raster<C, T> out(rect.width(), rect.height());
  const std::size_t row_bytes = static_cast<std::size_t>(rect.width()) * C;
  for (int y = 0; y < rect.height(); ++y) {
    const auto src_row = src.data().subspan(
        (static_cast<std::size_t>(rect.y0 + y) * src.width() + rect.x0) * C,
        row_bytes);
    std::copy(src_row.begin(), src_row.end(),
              out.data().begin() + static_cast<std::ptrdiff_t>(y * row_bytes));
  }
  return out;
}

// Writes `patch` into `dst` with its top-left corner at (rect.x0, rect.y0).
template <int C, typename T>
void paste(Raster<C, T>& dst, const Rect& rect, const Raster<C, T>& patch) {
  if (patch.width() != rect.width() || patch.height() != rect.height() ||
      !dst.bounds().contains(rect)) {
    throw DimensionMismatch("patch does not fit the target rectangle");
  }
  const std::size_t row_bytes = static_cast<std::size_t>(rect.width()) * C;
  for (int y = 0; y < rect.height(); ++y) {
    const auto src_row = patch.data().subspan(y * row_bytes, row_bytes);
    std::copy(src_row.begin(), src_row.end(),
              dst.data().begin() +
                  static_cast<std::ptrdiff_t>(
                      (static_cast<std::size_t>(rect.y0 + y) * dst.width() +
                       rect.x0) *
                      C));
  }
}

inline std::size_t count_set(const BinaryMask& mask) {
  std::size_t n = 0;
  for (std::uint8_t v : mask.data()) n += v != 0;
  return n;
}

}  // namespace objectaug

#endif  // OBJECTAUG_RASTER_HPP_
