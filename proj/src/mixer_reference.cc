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

// Serial reference for MixDataset. Each round splits the current image into
// its blocks, substitutes the chosen donor blocks and reassembles the image
// from scratch, so it shares no copy logic with the kernel.

#include "blockmix/error.h"
#include "blockmix/mixer.h"
#include "mix_internal.h"

namespace blockmix {

MixRun MixDatasetReference(const Dataset& dataset, const MixConfig& config) {
  internal::PreparedDataset prepared = internal::Prepare(dataset, config);
  const PartitionSpec& spec = config.partition;

  MixRun run;
  std::vector<MixProvenance> audit;
  for (std::size_t i = 0; i < prepared.originals.size(); ++i) {
    LabeledImage current = *prepared.originals[i];
    for (int t = 0; t < config.rounds; ++t) {
      Rng rng(DeriveStreamSeed(config.master_seed, current.source_id(),
                               static_cast<std::uint32_t>(t)));
      const auto donor_indices = internal::PickDonors(prepared, i, config, rng);

      MixProvenance record;
      record.target_id = current.source_id();
      record.round = t;
      record.outcomes.resize(spec.block_count);
      for (const std::size_t d : donor_indices) {
        record.donor_ids.push_back(prepared.originals[d]->source_id());
      }

      if (!donor_indices.empty()) {
        std::vector<Block> blocks;
        blocks.reserve(spec.block_count);
        for (int row = 0; row < spec.rows; ++row) {
          for (int col = 0; col < spec.cols; ++col) {
            blocks.push_back(ExtractBlock(current, spec, {row, col}));
          }
        }
        for (int row = 0; row < spec.rows; ++row) {
          const ReplacementMask mask =
              GenerateMask(spec.cols, config.replace_prob, rng);
          for (int col = 0; col < spec.cols; ++col) {
            if (!mask[col]) continue;
            const auto slot = rng.UniformIndex(donor_indices.size());
            const LabeledImage& donor =
                *prepared.originals[donor_indices[slot]];
            blocks[row * spec.cols + col] =
                ExtractBlock(donor, spec, {row, col});
            record.outcomes[row * spec.cols + col].donor_slot =
                static_cast<int>(slot);
          }
        }
        LabeledImage rebuilt(current.size(), current.label(),
                             current.source_id());
        for (const Block& block : blocks) {
          WriteBlockInPlace(rebuilt, spec, block.pos, block);
        }
        current = std::move(rebuilt);
      }
      audit.push_back(std::move(record));
    }
    run.images.push_back(std::move(current));
  }
  run.manifest = internal::BaseManifest(config, dataset);
  run.manifest.audit = std::move(audit);
  run.warnings = std::move(prepared.warnings);
  return run;
}

}  // namespace blockmix
