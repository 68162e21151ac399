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

#include "blockmix/image.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "blockmix/error.h"

namespace blockmix {
namespace {

void CheckShape(ImageSize size, const std::string& label) {
  if (size.width < 1 || size.height < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "image dimensions must be positive, got " +
                    FormatImageSize(size));
  }
  if (label.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "image label must be non-empty");
  }
}

int ParsePositive(std::string_view text, const std::string& whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected size as LxW with positive integers, got '" + whole +
                    "'");
  }
  return value;
}

}  // namespace

ImageSize ParseImageSize(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected size as LxW, got '" + text + "'");
  }
  const std::string_view view(text);
  return ImageSize{ParsePositive(view.substr(0, x), text),
                   ParsePositive(view.substr(x + 1), text)};
}

std::string FormatImageSize(ImageSize size) {
  return std::to_string(size.width) + "x" + std::to_string(size.height);
}

LabeledImage::LabeledImage(ImageSize size, std::string label,
                           std::string source_id)
    : size_(size), label_(std::move(label)), source_id_(std::move(source_id)) {
  CheckShape(size_, label_);
  pixels_.assign(size_.pixel_count() * kChannels, 0);
}

LabeledImage::LabeledImage(ImageSize size, std::vector<std::uint8_t> pixels,
                           std::string label, std::string source_id)
    : size_(size),
      pixels_(std::move(pixels)),
      label_(std::move(label)),
      source_id_(std::move(source_id)) {
  CheckShape(size_, label_);
  if (pixels_.size() != size_.pixel_count() * kChannels) {
    throw Error(ErrorCode::kShapeMismatch,
                "pixel buffer holds " + std::to_string(pixels_.size()) +
                    " bytes, expected " +
                    std::to_string(size_.pixel_count() * kChannels));
  }
}

LabeledImage ResizeBilinear(const LabeledImage& image, ImageSize target) {
  if (image.size() == target) return image;
  LabeledImage out(target, image.label(), image.source_id());

  const double scale_x = static_cast<double>(image.width()) / target.width;
  const double scale_y = static_cast<double>(image.height()) / target.height;
  const int max_x = image.width() - 1;
  const int max_y = image.height() - 1;

  for (int y = 0; y < target.height; ++y) {
    const double sy = std::clamp((y + 0.5) * scale_y - 0.5, 0.0,
                                 static_cast<double>(max_y));
    const int y0 = static_cast<int>(sy);
    const int y1 = std::min(y0 + 1, max_y);
    const double fy = sy - y0;
    for (int x = 0; x < target.width; ++x) {
      const double sx = std::clamp((x + 0.5) * scale_x - 0.5, 0.0,
                                   static_cast<double>(max_x));
      const int x0 = static_cast<int>(sx);
      const int x1 = std::min(x0 + 1, max_x);
      const double fx = sx - x0;
      for (int ch = 0; ch < kChannels; ++ch) {
        const double top = image.at(y0, x0, ch) * (1.0 - fx) +
                           image.at(y0, x1, ch) * fx;
        const double bottom = image.at(y1, x0, ch) * (1.0 - fx) +
                              image.at(y1, x1, ch) * fx;
        const double v = top * (1.0 - fy) + bottom * fy;
        out.at(y, x, ch) =
            static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
      }
    }
  }
  return out;
}

std::size_t CountDifferingPixels(const LabeledImage& a, const LabeledImage& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kShapeMismatch,
                "cannot compare " + FormatImageSize(a.size()) + " with " +
                    FormatImageSize(b.size()));
  }
  std::size_t count = 0;
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  for (std::size_t i = 0; i < pa.size(); i += kChannels) {
    if (pa[i] != pb[i] || pa[i + 1] != pb[i + 1] || pa[i + 2] != pb[i + 2]) {
      ++count;
    }
  }
  return count;
}

}  // namespace blockmix
