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

// Seeded synthetic datasets for tests and benchmarks.

#ifndef BLOCKMIX_SYNTHETIC_H_
#define BLOCKMIX_SYNTHETIC_H_

#include <cstdint>
#include <string>

#include "blockmix/image.h"
#include "blockmix/rng.h"

namespace blockmix {

enum class SyntheticKind {
  kUniformNoise,  // i.i.d. uniform channels; content-free, for throughput
  kTexture,       // smooth gratings and blobs with a per-label palette
};

LabeledImage UniformNoiseImage(ImageSize size, std::string label,
                               std::string source_id, Rng& rng);

LabeledImage TextureImage(ImageSize size, std::string label,
                          std::string source_id, int label_index, Rng& rng);

// `count` images spread round-robin over labels "class0".."class<k-1>",
// ids "class<j>/img<i>.png". Deterministic in `seed`.
Dataset SyntheticDataset(int count, int label_count, ImageSize size,
                         std::uint64_t seed, SyntheticKind kind);

}  // namespace blockmix

#endif  // BLOCKMIX_SYNTHETIC_H_
