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

#ifndef BLOCKMIX_IMAGE_H_
#define BLOCKMIX_IMAGE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace blockmix {

inline constexpr int kChannels = 3;

// Image extent in pixels. `width` is the horizontal length (L), `height`
// the vertical width (W) in the block-mixing notation.
struct ImageSize {
  int width = 0;
  int height = 0;

  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  friend bool operator==(const ImageSize&, const ImageSize&) = default;
};

// Parses "LxW" (e.g. "192x192"). Throws Error(kInvalidArgument).
ImageSize ParseImageSize(const std::string& text);
std::string FormatImageSize(ImageSize size);

// An RGB, 8-bit, row-major image with its class label and a stable source
// identifier (relative path for loaded files, synthetic id otherwise).
class LabeledImage {
 public:
  LabeledImage() = default;
  // Zero-filled image. Throws Error(kInvalidArgument) on empty dimensions or
  // an empty label.
  LabeledImage(ImageSize size, std::string label, std::string source_id);
  // Takes ownership of `pixels`, which must hold exactly width*height*3 bytes.
  LabeledImage(ImageSize size, std::vector<std::uint8_t> pixels,
               std::string label, std::string source_id);

  ImageSize size() const { return size_; }
  int width() const { return size_.width; }
  int height() const { return size_.height; }
  const std::string& label() const { return label_; }
  const std::string& source_id() const { return source_id_; }

  std::span<const std::uint8_t> pixels() const { return pixels_; }
  std::span<std::uint8_t> mutable_pixels() { return pixels_; }

  std::size_t row_stride() const {
    return static_cast<std::size_t>(size_.width) * kChannels;
  }
  std::size_t offset(int row, int col) const {
    return static_cast<std::size_t>(row) * row_stride() +
           static_cast<std::size_t>(col) * kChannels;
  }
  std::uint8_t at(int row, int col, int channel) const {
    return pixels_[offset(row, col) + channel];
  }
  std::uint8_t& at(int row, int col, int channel) {
    return pixels_[offset(row, col) + channel];
  }

  void set_source_id(std::string id) { source_id_ = std::move(id); }

  // Same label, id and pixels.
  friend bool operator==(const LabeledImage&, const LabeledImage&) = default;

 private:
  ImageSize size_;
  std::vector<std::uint8_t> pixels_;
  std::string label_;
  std::string source_id_;
};

using Dataset = std::vector<LabeledImage>;

// Bilinear resampling with pixel-center alignment and edge clamping. A
// same-size resize returns an exact copy.
LabeledImage ResizeBilinear(const LabeledImage& image, ImageSize target);

// Number of pixels (not bytes) at which the two images differ.
std::size_t CountDifferingPixels(const LabeledImage& a, const LabeledImage& b);

}  // namespace blockmix

#endif  // BLOCKMIX_IMAGE_H_
