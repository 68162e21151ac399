//
// Copyright 2026 The Blockmix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "blockmix/synthetic.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "blockmix/error.h"

namespace blockmix {

LabeledImage UniformNoiseImage(ImageSize size, std::string label,
                               std::string source_id, Rng& rng) {
  LabeledImage image(size, std::move(label), std::move(source_id));
  auto px = image.mutable_pixels();
  std::size_t i = 0;
  // Eight channel values per 64-bit draw.
  while (i < px.size()) {
    std::uint64_t bits = rng.NextU64();
    for (int k = 0; k < 8 && i < px.size(); ++k, bits >>= 8) {
      px[i++] = static_cast<std::uint8_t>(bits & 0xff);
    }
  }
  return image;
}

LabeledImage TextureImage(ImageSize size, std::string label,
                          std::string source_id, int label_index, Rng& rng) {
  LabeledImage image(size, std::move(label), std::move(source_id));
  constexpr double kTau = 2.0 * std::numbers::pi;

  struct Grating {
    double fx, fy, phase, amp;
  };
  struct Blob {
    double cx, cy, radius, amp;
  };
  Grating gratings[3];
  for (auto& g : gratings) {
    const double angle = rng.UnitDouble() * std::numbers::pi;
    const double cycles = 1.0 + 5.0 * rng.UnitDouble();
    g.fx = std::cos(angle) * cycles / size.width;
    g.fy = std::sin(angle) * cycles / size.height;
    g.phase = rng.UnitDouble() * kTau;
    g.amp = 20.0 + 30.0 * rng.UnitDouble();
  }
  Blob blobs[4];
  for (auto& b : blobs) {
    b.cx = rng.UnitDouble() * size.width;
    b.cy = rng.UnitDouble() * size.height;
    b.radius = (0.08 + 0.2 * rng.UnitDouble()) * std::min(size.width, size.height);
    b.amp = (rng.UnitDouble() - 0.5) * 160.0;
  }
  // Per-label base colour keeps classes visually distinct.
  const double base[3] = {110.0 + 30.0 * (label_index % 2),
                          100.0 + 25.0 * ((label_index / 2) % 2),
                          120.0 - 30.0 * (label_index % 2)};
  const double tint[3] = {0.8 + 0.4 * rng.UnitDouble(),
                          0.8 + 0.4 * rng.UnitDouble(),
                          0.8 + 0.4 * rng.UnitDouble()};

  for (int y = 0; y < size.height; ++y) {
    for (int x = 0; x < size.width; ++x) {
      double v = 0.0;
      for (const auto& g : gratings) {
        v += g.amp * std::sin(kTau * (g.fx * x + g.fy * y) + g.phase);
      }
      for (const auto& b : blobs) {
        const double dx = x - b.cx;
        const double dy = y - b.cy;
        v += b.amp * std::exp(-(dx * dx + dy * dy) / (2.0 * b.radius * b.radius));
      }
      const double noise = (rng.UnitDouble() - 0.5) * 12.0;
      for (int ch = 0; ch < kChannels; ++ch) {
        image.at(y, x, ch) = static_cast<std::uint8_t>(std::clamp(
            std::lround(base[ch] + tint[ch] * v + noise), 0L, 255L));
      }
    }
  }
  return image;
}

Dataset SyntheticDataset(int count, int label_count, ImageSize size,
                         std::uint64_t seed, SyntheticKind kind) {
  if (count < 0 || label_count < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "synthetic dataset needs count >= 0 and >= 1 label");
  }
  Dataset dataset;
  dataset.reserve(count);
  for (int i = 0; i < count; ++i) {
    const int label_index = i % label_count;
    const std::string label = "class" + std::to_string(label_index);
    char id[64];
    std::snprintf(id, sizeof(id), "%s/img%06d.png", label.c_str(), i);
    Rng rng(Mix64(seed ^ Mix64(static_cast<std::uint64_t>(i))));
    dataset.push_back(kind == SyntheticKind::kUniformNoise
                          ? UniformNoiseImage(size, label, id, rng)
                          : TextureImage(size, label, id, label_index, rng));
  }
  return dataset;
}

}  // namespace blockmix
