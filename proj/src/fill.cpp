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

#include "objectaug/fill.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace objectaug {

std::string_view strategy_name(const FillStrategy& strategy) {
  struct Namer {
    std::string_view operator()(const NoFill&) const { return "none"; }
    std::string_view operator()(const NoiseFill&) const { return "noise"; }
    std::string_view operator()(const DiffusionFill&) const {
      return "diffusion";
    }
    std::string_view operator()(const ExternalFill&) const {
      return "external";
    }
  };
  return std::visit(Namer{}, strategy);
}

void validate_strategy(const FillStrategy& strategy) {
  if (const auto* d = std::get_if<DiffusionFill>(&strategy)) {
    if (d->iterations < 1) {
      throw ValidationError("diffusion iterations must be >= 1");
    }
  } else if (const auto* e = std::get_if<ExternalFill>(&strategy)) {
    if (e->endpoint.empty()) {
      throw ValidationError("external fill requires an endpoint");
    }
    parse_endpoint(e->endpoint);
    if (e->timeout.count() <= 0) {
      throw ValidationError("external fill timeout must be positive");
    }
  }
}

BinaryMask dilate_mask(const BinaryMask& mask, int radius) {
  if (radius < 0) throw ValidationError("dilation radius must be >= 0");
  if (radius == 0) return mask;
  const int w = mask.width();
  const int h = mask.height();
  // The square element is separable: a horizontal then a vertical pass.
  BinaryMask rows(w, h, 0);
  for (int y = 0; y < h; ++y) {
    int last = -1;  // most recent set x, scanning left to right
    for (int x = 0; x < std::min(w, radius); ++x) {
      if (mask.at(x, y)) last = x;
    }
    for (int x = 0; x < w; ++x) {
      if (x + radius < w && mask.at(x + radius, y)) last = x + radius;
      if (last >= 0 && last >= x - radius) rows.at(x, y) = 1;
    }
  }
  BinaryMask out(w, h, 0);
  for (int x = 0; x < w; ++x) {
    int last = -1;
    for (int y = 0; y < std::min(h, radius); ++y) {
      if (rows.at(x, y)) last = y;
    }
    for (int y = 0; y < h; ++y) {
      if (y + radius < h && rows.at(x, y + radius)) last = y + radius;
      if (last >= 0 && last >= y - radius) out.at(x, y) = 1;
    }
  }
  return out;
}

namespace {

std::uint8_t round_half_up(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
}

void zero_fill(RgbImage& out, const BinaryMask& hole) {
  for (std::size_t i = 0; i < hole.pixel_count(); ++i) {
    if (!hole.data()[i]) continue;
    for (int c = 0; c < 3; ++c) out.data()[3 * i + c] = 0;
  }
}

void noise_fill(RgbImage& out, const BinaryMask& hole, Rng& rng) {
  for (std::size_t i = 0; i < hole.pixel_count(); ++i) {
    if (!hole.data()[i]) continue;
    for (int c = 0; c < 3; ++c) {
      out.data()[3 * i + c] = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
    }
  }
}

constexpr std::array<std::array<int, 2>, 4> kNeighbours4 = {
    {{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};

// Gauss-Seidel relaxation of the discrete Laplace equation on the hole.
// Each 4-connected hole component starts at the mean of its distinct known
// 4-neighbours (zero when it has none, i.e. the hole is the whole patch).
void diffusion_fill(RgbImage& out, const BinaryMask& hole, int iterations) {
  const int w = hole.width();
  const int h = hole.height();
  const std::size_t n = hole.pixel_count();

  std::vector<double> value(3 * n);
  for (std::size_t i = 0; i < 3 * n; ++i) value[i] = out.data()[i];

  std::vector<int> component(n, -1);
  std::vector<int> boundary_stamp(n, -1);
  std::vector<int> hole_pixels;  // raster order
  std::vector<int> stack;
  std::vector<int> members;
  int next_component = 0;
  for (int start = 0; start < static_cast<int>(n); ++start) {
    if (!hole.data()[start] || component[start] >= 0) continue;
    const int id = next_component++;
    members.clear();
    stack.push_back(start);
    component[start] = id;
    double sum[3] = {0.0, 0.0, 0.0};
    int boundary_count = 0;
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      members.push_back(p);
      const int px = p % w;
      const int py = p / w;
      for (const auto& [dx, dy] : kNeighbours4) {
        const int nx = px + dx;
        const int ny = py + dy;
        if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
        const int q = ny * w + nx;
        if (hole.data()[q]) {
          if (component[q] < 0) {
            component[q] = id;
            stack.push_back(q);
          }
        } else if (boundary_stamp[q] != id) {
          boundary_stamp[q] = id;
          ++boundary_count;
          for (int c = 0; c < 3; ++c) sum[c] += out.data()[3 * q + c];
        }
      }
    }
    for (int p : members) {
      for (int c = 0; c < 3; ++c) {
        value[3 * p + c] = boundary_count ? sum[c] / boundary_count : 0.0;
      }
    }
  }
  for (int p = 0; p < static_cast<int>(n); ++p) {
    if (hole.data()[p]) hole_pixels.push_back(p);
  }

  // Precomputed in-bounds neighbours of each hole pixel.
  struct Stencil {
    int p;
    int count;
    std::array<int, 4> q;
  };
  std::vector<Stencil> stencils;
  stencils.reserve(hole_pixels.size());
  for (int p : hole_pixels) {
    Stencil s{p, 0, {}};
    const int px = p % w;
    const int py = p / w;
    for (const auto& [dx, dy] : kNeighbours4) {
      const int nx = px + dx;
      const int ny = py + dy;
      if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
      s.q[s.count++] = ny * w + nx;
    }
    stencils.push_back(s);
  }

  for (int it = 0; it < iterations; ++it) {
    for (const Stencil& s : stencils) {
      if (s.count == 0) continue;
      for (int c = 0; c < 3; ++c) {
        double acc = 0.0;
        for (int k = 0; k < s.count; ++k) acc += value[3 * s.q[k] + c];
        value[3 * s.p + c] = acc / s.count;
      }
    }
  }
  for (int p : hole_pixels) {
    for (int c = 0; c < 3; ++c) {
      out.data()[3 * p + c] = round_half_up(value[3 * p + c]);
    }
  }
}

}  // namespace

RgbImage fill_patch(const RgbImage& patch, const BinaryMask& hole,
                    const FillStrategy& strategy, Rng& rng) {
  if (!patch.same_dims(hole)) {
    throw DimensionMismatch("patch and hole differ in size");
  }
  RgbImage out = patch;
  if (count_set(hole) == 0) return out;

  if (std::holds_alternative<NoFill>(strategy)) {
    zero_fill(out, hole);
  } else if (std::holds_alternative<NoiseFill>(strategy)) {
    noise_fill(out, hole, rng);
  } else if (const auto* d = std::get_if<DiffusionFill>(&strategy)) {
    diffusion_fill(out, hole, d->iterations);
  } else {
    const RgbImage filled =
        request_inpaint(std::get<ExternalFill>(strategy), patch, hole);
    // Only hole pixels are taken from the service.
    for (std::size_t i = 0; i < hole.pixel_count(); ++i) {
      if (!hole.data()[i]) continue;
      for (int c = 0; c < 3; ++c) out.data()[3 * i + c] = filled.data()[3 * i + c];
    }
  }
  return out;
}

RgbImage inpaint_background(const RgbImage& patch,
                            const BinaryMask& object_mask, int dilation_radius,
                            const FillStrategy& strategy, Rng& rng) {
  if (!patch.same_dims(object_mask)) {
    throw DimensionMismatch("patch and object mask differ in size");
  }
  return fill_patch(patch, dilate_mask(object_mask, dilation_radius), strategy,
                    rng);
}

}  // namespace objectaug
