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

// Shared set-up for the mixing kernel and its serial reference. Both must
// consume each (image, round) stream in exactly the same order:
//   1. donor slots (SelectDonorSlots)
//   2. per grid row: `cols` mask draws, then one donor draw per replaced
//      block, left to right.

#ifndef BLOCKMIX_SRC_MIX_INTERNAL_H_
#define BLOCKMIX_SRC_MIX_INTERNAL_H_

#include <cstddef>
#include <string>
#include <vector>

#include "blockmix/image.h"
#include "blockmix/manifest.h"
#include "blockmix/mix_config.h"
#include "blockmix/rng.h"

namespace blockmix::internal {

struct PreparedDataset {
  // Canonical-size originals; points into `dataset` when no resize was
  // needed, otherwise into `resized`.
  std::vector<const LabeledImage*> originals;
  std::vector<LabeledImage> resized;
  std::vector<std::vector<std::size_t>> groups;  // dataset indices per label
  std::vector<std::size_t> group_of;
  std::vector<std::size_t> index_in_group;
  std::vector<std::string> warnings;
};

// Validates config and donor policies up front so the parallel section
// cannot fail.
PreparedDataset Prepare(const Dataset& dataset, const MixConfig& config);

// Dataset indices of the donors of image `i`. Empty only for a singleton
// label under the passthrough policy.
std::vector<std::size_t> PickDonors(const PreparedDataset& prepared,
                                    std::size_t i, const MixConfig& config,
                                    Rng& rng);

MixManifest BaseManifest(const MixConfig& config, const Dataset& originals);

}  // namespace blockmix::internal

#endif  // BLOCKMIX_SRC_MIX_INTERNAL_H_
