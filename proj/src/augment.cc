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

#include "blockmix/augment.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "blockmix/error.h"

namespace blockmix {
namespace {

std::string ShortNumber(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

// "label/name.ext" -> "label/name<suffix>.png"
std::string VariantId(const std::string& source_id, const std::string& suffix) {
  const auto slash = source_id.find_last_of('/');
  const auto dot = source_id.find_last_of('.');
  const bool has_ext =
      dot != std::string::npos && (slash == std::string::npos || dot > slash);
  return (has_ext ? source_id.substr(0, dot) : source_id) + suffix + ".png";
}

}  // namespace

void ValidateAugmentConfig(const AugmentConfig& config) {
  if (!(config.brightness_factor >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "brightness factor must be >= 0");
  }
  if (!(std::abs(config.rotation_degrees) <= 180.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "rotation must lie within [-180, 180] degrees");
  }
}

LabeledImage Flip(const LabeledImage& image) {
  LabeledImage out = image;
  const int w = image.width();
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < w; ++x) {
      for (int ch = 0; ch < kChannels; ++ch) {
        out.at(y, x, ch) = image.at(y, w - 1 - x, ch);
      }
    }
  }
  return out;
}

LabeledImage Rotate(const LabeledImage& image, double degrees) {
  LabeledImage out(image.size(), image.label(), image.source_id());
  const double theta = degrees * std::numbers::pi / 180.0;
  const double cos_t = std::cos(theta);
  const double sin_t = std::sin(theta);
  const double cx = (image.width() - 1) / 2.0;
  const double cy = (image.height() - 1) / 2.0;
  const double max_x = image.width() - 1;
  const double max_y = image.height() - 1;
  constexpr double kEdgeSlack = 1e-9;

  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      // Inverse map: output pixel -> source position. Image rows grow
      // downwards, so a counter-clockwise turn uses (+sin) here.
      const double dx = x - cx;
      const double dy = y - cy;
      double sx = cos_t * dx - sin_t * dy + cx;
      double sy = sin_t * dx + cos_t * dy + cy;
      if (sx < -kEdgeSlack || sy < -kEdgeSlack || sx > max_x + kEdgeSlack ||
          sy > max_y + kEdgeSlack) {
        continue;  // stays black
      }
      sx = std::clamp(sx, 0.0, max_x);
      sy = std::clamp(sy, 0.0, max_y);
      const int x0 = static_cast<int>(sx);
      const int y0 = static_cast<int>(sy);
      const int x1 = std::min(x0 + 1, image.width() - 1);
      const int y1 = std::min(y0 + 1, image.height() - 1);
      const double fx = sx - x0;
      const double fy = sy - y0;
      for (int ch = 0; ch < kChannels; ++ch) {
        const double top = image.at(y0, x0, ch) * (1.0 - fx) +
                           image.at(y0, x1, ch) * fx;
        const double bottom = image.at(y1, x0, ch) * (1.0 - fx) +
                              image.at(y1, x1, ch) * fx;
        out.at(y, x, ch) = static_cast<std::uint8_t>(
            std::clamp(std::lround(top * (1.0 - fy) + bottom * fy), 0L, 255L));
      }
    }
  }
  return out;
}

LabeledImage Brighten(const LabeledImage& image, double factor) {
  if (!(factor >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "brightness factor must be >= 0");
  }
  LabeledImage out = image;
  for (std::uint8_t& v : out.mutable_pixels()) {
    v = static_cast<std::uint8_t>(std::clamp(std::lround(v * factor), 0L, 255L));
  }
  return out;
}

Dataset AugmentDataset(const Dataset& dataset, const AugmentConfig& config) {
  ValidateAugmentConfig(config);
  Dataset out;
  out.reserve(dataset.size() *
              (config.emit_all_variants ? 1 + config.enabled_count() : 1));
  for (const LabeledImage& image : dataset) {
    if (!config.emit_all_variants) {
      LabeledImage chained = image;
      if (config.flip_horizontal) chained = Flip(chained);
      if (config.rotate) chained = Rotate(chained, config.rotation_degrees);
      if (config.brighten) chained = Brighten(chained, config.brightness_factor);
      out.push_back(std::move(chained));
      continue;
    }
    out.push_back(image);
    if (config.flip_horizontal) {
      LabeledImage v = Flip(image);
      v.set_source_id(VariantId(image.source_id(), "__flip"));
      out.push_back(std::move(v));
    }
    if (config.rotate) {
      LabeledImage v = Rotate(image, config.rotation_degrees);
      v.set_source_id(VariantId(image.source_id(),
                                "__rot" + ShortNumber(config.rotation_degrees)));
      out.push_back(std::move(v));
    }
    if (config.brighten) {
      LabeledImage v = Brighten(image, config.brightness_factor);
      v.set_source_id(VariantId(
          image.source_id(), "__bright" + ShortNumber(config.brightness_factor)));
      out.push_back(std::move(v));
    }
  }
  return out;
}

AugmentRecord MakeAugmentRecord(const AugmentConfig& config,
                                std::int64_t input_count,
                                std::int64_t output_count) {
  AugmentRecord record;
  record.flip = config.flip_horizontal;
  if (config.rotate) record.rotation_degrees = config.rotation_degrees;
  if (config.brighten) record.brightness_factor = config.brightness_factor;
  record.emit_all_variants = config.emit_all_variants;
  record.input_count = input_count;
  record.output_count = output_count;
  return record;
}

}  // namespace blockmix
