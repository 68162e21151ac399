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

#include "blockmix/mixer.h"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "blockmix/error.h"
#include "mix_internal.h"

namespace blockmix {
namespace {

void FillMask(std::span<std::uint8_t> bits, double p, Rng& rng) {
  for (auto& bit : bits) bit = rng.Bernoulli(p) ? 1 : 0;
}

// Mixes `target` in place. `outcomes`, when non-null, receives one entry per
// block in row-major order.
void MixInPlace(LabeledImage& target,
                std::span<const LabeledImage* const> donors,
                const PartitionSpec& spec, double p, Rng& rng,
                std::vector<BlockOutcome>* outcomes) {
  std::vector<std::uint8_t> mask(spec.cols);
  if (outcomes != nullptr) outcomes->assign(spec.block_count, BlockOutcome{});
  for (int row = 0; row < spec.rows; ++row) {
    FillMask(mask, p, rng);
    for (int col = 0; col < spec.cols; ++col) {
      if (!mask[col]) continue;
      const auto slot = rng.UniformIndex(donors.size());
      CopyBlock(*donors[slot], target, spec, {row, col});
      if (outcomes != nullptr) {
        (*outcomes)[row * spec.cols + col].donor_slot = static_cast<int>(slot);
      }
    }
  }
}

}  // namespace

ReplacementMask GenerateMask(int length, double p, Rng& rng) {
  if (length < 1) {
    throw Error(ErrorCode::kInvalidArgument, "mask length must be >= 1");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "probability must lie in [0, 1]");
  }
  ReplacementMask mask;
  mask.replace.resize(length);
  FillMask(mask.replace, p, rng);
  return mask;
}

std::vector<std::size_t> SelectDonorSlots(std::size_t candidate_count,
                                          std::size_t count,
                                          bool with_replacement_fill,
                                          Rng& rng) {
  if (candidate_count == 0) {
    throw Error(ErrorCode::kSingletonLabel, "no donor candidates");
  }
  if (candidate_count < count && !with_replacement_fill) {
    throw Error(ErrorCode::kDonorShortage,
                std::to_string(candidate_count) + " candidates for " +
                    std::to_string(count) + " donors");
  }
  // Partial Fisher-Yates over the virtual identity array [0, n); only the
  // swapped entries are materialised.
  const std::size_t distinct = std::min(candidate_count, count);
  std::unordered_map<std::size_t, std::size_t> swapped;
  auto value_at = [&](std::size_t k) {
    auto it = swapped.find(k);
    return it == swapped.end() ? k : it->second;
  };
  std::vector<std::size_t> slots;
  slots.reserve(count);
  for (std::size_t i = 0; i < distinct; ++i) {
    const std::size_t j = i + rng.UniformIndex(candidate_count - i);
    const std::size_t vi = value_at(i);
    const std::size_t vj = value_at(j);
    swapped[i] = vj;
    swapped[j] = vi;
    slots.push_back(vj);
  }
  while (slots.size() < count) {
    slots.push_back(rng.UniformIndex(candidate_count));
  }
  return slots;
}

MixedImage MixImage(const LabeledImage& target, const DonorSet& donors,
                    const PartitionSpec& spec, double p, Rng& rng) {
  if (donors.empty()) {
    throw Error(ErrorCode::kEmptyDonorSet,
                "no donors for '" + target.source_id() + "'");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "probability must lie in [0, 1]");
  }
  auto check = [&](const LabeledImage& image) {
    if (image.size() != spec.image_size()) {
      throw Error(ErrorCode::kShapeMismatch,
                  "'" + image.source_id() + "' is " +
                      FormatImageSize(image.size()) + ", expected " +
                      FormatImageSize(spec.image_size()));
    }
  };
  check(target);
  MixedImage out{target, {}};
  out.provenance.target_id = target.source_id();
  for (const LabeledImage* donor : donors.donors) {
    check(*donor);
    if (donor->label() != target.label()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "donor '" + donor->source_id() + "' has label '" +
                      donor->label() + "', target has '" + target.label() +
                      "'");
    }
    out.provenance.donor_ids.push_back(donor->source_id());
  }
  MixInPlace(out.image, donors.donors, spec, p, rng,
             &out.provenance.outcomes);
  return out;
}

namespace internal {

PreparedDataset Prepare(const Dataset& dataset, const MixConfig& config) {
  ValidateMixConfig(config);
  if (dataset.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "nothing to mix");
  }
  PreparedDataset prepared;
  std::unordered_set<std::string> ids;
  std::size_t to_resize = 0;
  for (const LabeledImage& image : dataset) {
    if (!ids.insert(image.source_id()).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate source id '" + image.source_id() + "'");
    }
    if (image.size() != config.canonical_size()) ++to_resize;
  }
  // Reserved up front so the pointers below stay valid.
  prepared.resized.reserve(to_resize);
  prepared.originals.reserve(dataset.size());
  for (const LabeledImage& image : dataset) {
    if (image.size() == config.canonical_size()) {
      prepared.originals.push_back(&image);
    } else {
      prepared.resized.push_back(
          ResizeBilinear(image, config.canonical_size()));
      prepared.originals.push_back(&prepared.resized.back());
    }
  }

  std::map<std::string, std::size_t> group_index;
  prepared.group_of.resize(dataset.size());
  prepared.index_in_group.resize(dataset.size());
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    auto [it, inserted] =
        group_index.emplace(dataset[i].label(), prepared.groups.size());
    if (inserted) prepared.groups.emplace_back();
    prepared.group_of[i] = it->second;
    prepared.groups[it->second].push_back(i);
  }
  // Candidate slots follow source_id order so donor choice does not depend
  // on the order of the input.
  for (auto& group : prepared.groups) {
    std::sort(group.begin(), group.end(), [&](std::size_t a, std::size_t b) {
      return dataset[a].source_id() < dataset[b].source_id();
    });
    for (std::size_t k = 0; k < group.size(); ++k) {
      prepared.index_in_group[group[k]] = k;
    }
  }

  const auto needed = static_cast<std::size_t>(config.donors_per_image);
  for (const auto& [label, g] : group_index) {
    const std::size_t candidates = prepared.groups[g].size() - 1;
    if (candidates == 0) {
      if (config.singleton_label_policy == SingletonLabelPolicy::kError) {
        throw Error(ErrorCode::kSingletonLabel,
                    "label '" + label + "' has a single image");
      }
      prepared.warnings.push_back("label '" + label +
                                  "' has a single image; passed through "
                                  "unmixed");
    } else if (candidates < needed &&
               config.donor_shortage_policy == DonorShortagePolicy::kError) {
      throw Error(ErrorCode::kDonorShortage,
                  "label '" + label + "' offers " +
                      std::to_string(candidates) + " donor candidates, " +
                      std::to_string(needed) + " required");
    }
  }
  return prepared;
}

std::vector<std::size_t> PickDonors(const PreparedDataset& prepared,
                                    std::size_t i, const MixConfig& config,
                                    Rng& rng) {
  const auto& group = prepared.groups[prepared.group_of[i]];
  const std::size_t self = prepared.index_in_group[i];
  if (group.size() == 1) return {};
  const auto slots = SelectDonorSlots(
      group.size() - 1, static_cast<std::size_t>(config.donors_per_image),
      config.donor_shortage_policy ==
          DonorShortagePolicy::kSampleWithReplacement,
      rng);
  std::vector<std::size_t> donors;
  donors.reserve(slots.size());
  for (const std::size_t slot : slots) {
    donors.push_back(group[slot < self ? slot : slot + 1]);
  }
  return donors;
}

MixManifest BaseManifest(const MixConfig& config, const Dataset& dataset) {
  MixManifest manifest;
  manifest.mix = config;
  manifest.census = Census(dataset);
  return manifest;
}

}  // namespace internal

MixRun MixDataset(const Dataset& dataset, const MixConfig& config,
                  const MixOptions& options) {
  if (options.workers < 1) {
    throw Error(ErrorCode::kInvalidArgument, "workers must be >= 1");
  }
  internal::PreparedDataset prepared = internal::Prepare(dataset, config);
  const std::size_t n = dataset.size();
  const int rounds = config.rounds;
  const PartitionSpec& spec = config.partition;

  MixRun run;
  run.images.reserve(n);
  for (const LabeledImage* image : prepared.originals) {
    run.images.push_back(*image);
  }
  std::vector<MixProvenance> provenance(
      options.record_provenance ? n * static_cast<std::size_t>(rounds) : 0);

  std::exception_ptr failure;
#pragma omp parallel for num_threads(options.workers) schedule(dynamic, 4)
  for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    try {
      LabeledImage& image = run.images[i];
      std::vector<const LabeledImage*> donors;
      for (int t = 0; t < rounds; ++t) {
        Rng rng(DeriveStreamSeed(config.master_seed, image.source_id(),
                                 static_cast<std::uint32_t>(t)));
        const auto donor_indices =
            internal::PickDonors(prepared, i, config, rng);
        donors.clear();
        for (const std::size_t d : donor_indices) {
          donors.push_back(prepared.originals[d]);
        }
        MixProvenance* record =
            options.record_provenance ? &provenance[i * rounds + t] : nullptr;
        if (record != nullptr) {
          record->target_id = image.source_id();
          record->round = t;
          for (const LabeledImage* d : donors) {
            record->donor_ids.push_back(d->source_id());
          }
        }
        if (donors.empty()) {
          if (record != nullptr) {
            record->outcomes.assign(spec.block_count, BlockOutcome{});
          }
          continue;
        }
        MixInPlace(image, donors, spec, config.replace_prob, rng,
                   record != nullptr ? &record->outcomes : nullptr);
      }
    } catch (...) {
#pragma omp critical(blockmix_mix_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  run.manifest = internal::BaseManifest(config, dataset);
  if (options.record_provenance) run.manifest.audit = std::move(provenance);
  run.warnings = std::move(prepared.warnings);
  return run;
}

}  // namespace blockmix
