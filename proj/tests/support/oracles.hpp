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

#ifndef OBJECTAUG_TESTS_ORACLES_HPP_
#define OBJECTAUG_TESTS_ORACLES_HPP_

// Reference computations written independently of the library code paths
// they check. Slow by design; use only in tests.

#include <zlib.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "objectaug/raster.hpp"

namespace objectaug::testing {

// Union-find component labelling of same-valued foreground pixels.
// Returns the area of every component, keyed by category.
inline std::multimap<std::uint8_t, std::size_t> oracle_component_areas(
    const LabelMap& mask, bool eight_connected) {
  const int w = mask.width();
  const int h = mask.height();
  std::vector<int> parent(static_cast<std::size_t>(w) * h);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto fg = [&](int x, int y) {
    const auto v = mask.at(x, y);
    return v != kBackgroundLabel && v != kIgnoreLabel;
  };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!fg(x, y)) continue;
      // Look back at already-visited neighbours only.
      const int back[4][2] = {{-1, 0}, {0, -1}, {-1, -1}, {1, -1}};
      const int n = eight_connected ? 4 : 2;
      for (int k = 0; k < n; ++k) {
        const int nx = x + back[k][0];
        const int ny = y + back[k][1];
        if (nx < 0 || ny < 0 || nx >= w) continue;
        if (fg(nx, ny) && mask.at(nx, ny) == mask.at(x, y)) {
          parent[find(y * w + x)] = find(ny * w + nx);
        }
      }
    }
  }
  std::map<int, std::size_t> area;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (fg(x, y)) ++area[find(y * w + x)];
    }
  }
  std::multimap<std::uint8_t, std::size_t> out;
  for (const auto& [root, a] : area) {
    out.emplace(mask.data()[root], a);
  }
  return out;
}

// Dilation by direct scan of the (2r+1)^2 neighbourhood.
inline BinaryMask oracle_dilate(const BinaryMask& m, int r) {
  BinaryMask out(m.width(), m.height());
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      bool any = false;
      for (int dy = -r; dy <= r && !any; ++dy) {
        for (int dx = -r; dx <= r && !any; ++dx) {
          any = m.in_bounds(x + dx, y + dy) && m.at(x + dx, y + dy);
        }
      }
      out.at(x, y) = any;
    }
  }
  return out;
}

inline double oracle_median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

// Literal per-pixel evaluation of
//   U   = M_orig OR M_aug,   A = U - M_aug
//   I   = I_c * (1 - U) + I_aug + I_inp * A
//   M   = M_c * (1 - U) + M_aug * k
struct OraclePatch {
  RgbImage image;
  LabelMap mask;
};

inline OraclePatch oracle_assemble(const RgbImage& ic, const LabelMap& mc,
                                   const BinaryMask& m_orig,
                                   const RgbImage& i_aug,
                                   const BinaryMask& m_aug,
                                   const RgbImage& i_inp, std::uint8_t k) {
  OraclePatch out{RgbImage(ic.width(), ic.height()),
                  LabelMap(ic.width(), ic.height())};
  for (int y = 0; y < ic.height(); ++y) {
    for (int x = 0; x < ic.width(); ++x) {
      const int u = (m_orig.at(x, y) | m_aug.at(x, y)) ? 1 : 0;
      const int a = u - m_aug.at(x, y);
      for (int c = 0; c < 3; ++c) {
        const int v = ic.at(x, y, c) * (1 - u) + i_aug.at(x, y, c) +
                      i_inp.at(x, y, c) * a;
        out.image.at(x, y, c) = static_cast<std::uint8_t>(v);
      }
      out.mask.at(x, y) =
          static_cast<std::uint8_t>(mc.at(x, y) * (1 - u) + m_aug.at(x, y) * k);
    }
  }
  return out;
}

// Minimal palette PNG writer (IHDR/PLTE/IDAT/IEND, filter 0), independent
// of libpng, for checking that masks are read by index.
inline std::vector<std::uint8_t> oracle_palette_png(
    int w, int h, const std::vector<std::uint8_t>& indices,
    const std::vector<std::array<std::uint8_t, 3>>& palette) {
  std::vector<std::uint8_t> out = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
  auto put32 = [](std::vector<std::uint8_t>& v, std::uint32_t x) {
    v.push_back(x >> 24);
    v.push_back((x >> 16) & 0xFF);
    v.push_back((x >> 8) & 0xFF);
    v.push_back(x & 0xFF);
  };
  auto chunk = [&](const char* type, const std::vector<std::uint8_t>& data) {
    put32(out, static_cast<std::uint32_t>(data.size()));
    std::vector<std::uint8_t> body(type, type + 4);
    body.insert(body.end(), data.begin(), data.end());
    out.insert(out.end(), body.begin(), body.end());
    put32(out, static_cast<std::uint32_t>(
                   crc32(0L, body.data(), static_cast<uInt>(body.size()))));
  };
  std::vector<std::uint8_t> ihdr;
  put32(ihdr, w);
  put32(ihdr, h);
  ihdr.insert(ihdr.end(), {8, 3, 0, 0, 0});
  chunk("IHDR", ihdr);
  std::vector<std::uint8_t> plte;
  for (const auto& c : palette) plte.insert(plte.end(), c.begin(), c.end());
  chunk("PLTE", plte);
  std::vector<std::uint8_t> raw;
  for (int y = 0; y < h; ++y) {
    raw.push_back(0);
    raw.insert(raw.end(), indices.begin() + y * w, indices.begin() + (y + 1) * w);
  }
  uLongf zlen = compressBound(static_cast<uLong>(raw.size()));
  std::vector<std::uint8_t> z(zlen);
  compress(z.data(), &zlen, raw.data(), static_cast<uLong>(raw.size()));
  z.resize(zlen);
  chunk("IDAT", z);
  chunk("IEND", {});
  return out;
}

}  // namespace objectaug::testing

#endif  // OBJECTAUG_TESTS_ORACLES_HPP_
