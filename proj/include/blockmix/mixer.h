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

// Label-based pixel block mixing.
//
// Every image is resized to the canonical size and cut into an even grid of
// blocks. For each target image N_s same-label donors are drawn from the
// original dataset (never the target itself). Grid rows are then visited in
// order: a keep/replace mask of one draw per column is generated, and every
// replaced block is overwritten with the same-position block of a donor
// picked uniformly from the N_s. Rounds compound: round t mixes round t-1's
// output, always against donors from the original images.
//
// All randomness for (image, round) comes from a private stream seeded by
// DeriveStreamSeed(master_seed, source_id, round), so results do not depend
// on processing order or worker count.

#ifndef BLOCKMIX_MIXER_H_
#define BLOCKMIX_MIXER_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "blockmix/image.h"
#include "blockmix/manifest.h"
#include "blockmix/mix_config.h"
#include "blockmix/partition.h"
#include "blockmix/rng.h"

namespace blockmix {

// Keep/replace decisions for one grid row (length == cols).
struct ReplacementMask {
  std::vector<std::uint8_t> replace;  // 1 = replace, 0 = keep

  std::size_t size() const { return replace.size(); }
  bool operator[](std::size_t i) const { return replace[i] != 0; }
};

// One Bernoulli(p) draw per position.
ReplacementMask GenerateMask(int length, double p, Rng& rng);

// Ordered same-label donors for one target. Pointers refer into the dataset
// the caller owns.
struct DonorSet {
  std::vector<const LabeledImage*> donors;

  std::size_t size() const { return donors.size(); }
  bool empty() const { return donors.empty(); }
};

struct MixedImage {
  LabeledImage image;
  MixProvenance provenance;
};

// Mixes one target against `donors`. Throws Error(kEmptyDonorSet),
// Error(kShapeMismatch) if any image is not at the spec's canonical size.
MixedImage MixImage(const LabeledImage& target, const DonorSet& donors,
                    const PartitionSpec& spec, double p, Rng& rng);

// Picks `count` slots out of `candidate_count` candidates: without
// replacement when enough exist, otherwise (with_replacement_fill) every
// candidate once followed by uniform resampling. Returned values are
// candidate slots in [0, candidate_count).
std::vector<std::size_t> SelectDonorSlots(std::size_t candidate_count,
                                          std::size_t count,
                                          bool with_replacement_fill,
                                          Rng& rng);

struct MixOptions {
  int workers = 1;
  bool record_provenance = true;
};

struct MixRun {
  Dataset images;  // same order as the input
  MixManifest manifest;  // audit filled when record_provenance is set
  std::vector<std::string> warnings;
};

// Resizes to the canonical size, checks donor policies for every label and
// mixes all images for config.rounds rounds. Work is spread over
// options.workers OpenMP threads; output is byte-identical for any count.
// Throws Error(kDonorShortage), Error(kSingletonLabel),
// Error(kEmptyDataset) or Error(kInvalidArgument) (bad config, duplicate
// source ids).
MixRun MixDataset(const Dataset& dataset, const MixConfig& config,
                  const MixOptions& options = {});

// Plain single-threaded transcription of the same procedure built on
// ExtractBlock/WriteBlock. Kept as the reference the kernel is tested and
// benchmarked against.
MixRun MixDatasetReference(const Dataset& dataset, const MixConfig& config);

}  // namespace blockmix

#endif  // BLOCKMIX_MIXER_H_
