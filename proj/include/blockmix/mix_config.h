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

#ifndef BLOCKMIX_MIX_CONFIG_H_
#define BLOCKMIX_MIX_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "blockmix/image.h"
#include "blockmix/partition.h"

namespace blockmix {

enum class DonorShortagePolicy { kError, kSampleWithReplacement };
enum class SingletonLabelPolicy { kError, kPassthroughWithWarning };

std::string_view PolicyName(DonorShortagePolicy policy);
std::string_view PolicyName(SingletonLabelPolicy policy);
DonorShortagePolicy ParseDonorShortagePolicy(std::string_view name);
SingletonLabelPolicy ParseSingletonLabelPolicy(std::string_view name);

inline constexpr int kDefaultDonors = 10;
inline constexpr int kDefaultRounds = 1;
inline constexpr double kDefaultReplaceProb = 0.5;

struct MixConfig {
  int rounds = kDefaultRounds;         // N_t
  int donors_per_image = kDefaultDonors;  // N_s
  double replace_prob = kDefaultReplaceProb;
  PartitionSpec partition;             // carries the canonical size
  std::uint64_t master_seed = 0;
  DonorShortagePolicy donor_shortage_policy = DonorShortagePolicy::kError;
  SingletonLabelPolicy singleton_label_policy = SingletonLabelPolicy::kError;

  ImageSize canonical_size() const { return partition.image_size(); }

  friend bool operator==(const MixConfig&, const MixConfig&) = default;
};

// Builds a config for `canonical` split into block_len x block_wid blocks.
MixConfig MakeMixConfig(ImageSize canonical, int block_len, int block_wid);

// Throws Error(kInvalidArgument) unless rounds >= 1, donors >= 1,
// 0 <= replace_prob <= 1 and the partition is a derived, consistent one.
void ValidateMixConfig(const MixConfig& config);

}  // namespace blockmix

#endif  // BLOCKMIX_MIX_CONFIG_H_
