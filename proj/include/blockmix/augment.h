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

#ifndef BLOCKMIX_AUGMENT_H_
#define BLOCKMIX_AUGMENT_H_

#include "blockmix/image.h"
#include "blockmix/manifest.h"

namespace blockmix {

inline constexpr double kDefaultRotationDegrees = 15.0;
inline constexpr double kDefaultBrightnessFactor = 1.3;

struct AugmentConfig {
  bool flip_horizontal = true;
  bool rotate = true;
  double rotation_degrees = kDefaultRotationDegrees;
  bool brighten = true;
  double brightness_factor = kDefaultBrightnessFactor;
  // Each enabled augmentation adds a variant next to the original. When
  // off, the enabled augmentations are chained and replace the original.
  bool emit_all_variants = true;

  int enabled_count() const {
    return int{flip_horizontal} + int{rotate} + int{brighten};
  }
};

// Throws Error(kInvalidArgument) for a negative factor or |degrees| > 180.
void ValidateAugmentConfig(const AugmentConfig& config);

// Horizontal mirror.
LabeledImage Flip(const LabeledImage& image);

// Rotation about the image centre (counter-clockwise for positive degrees),
// bilinear sampling, same dimensions, black outside the source frame.
LabeledImage Rotate(const LabeledImage& image, double degrees);

// v -> clamp(round(v * factor), 0, 255) on every channel.
LabeledImage Brighten(const LabeledImage& image, double factor);

// Variant ids are "<label>/<stem>__flip.png", "__rot<deg>.png",
// "__bright<factor>.png"; chained mode keeps the source id.
Dataset AugmentDataset(const Dataset& dataset, const AugmentConfig& config);

AugmentRecord MakeAugmentRecord(const AugmentConfig& config,
                                std::int64_t input_count,
                                std::int64_t output_count);

}  // namespace blockmix

#endif  // BLOCKMIX_AUGMENT_H_
