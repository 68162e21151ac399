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

#include "blockmix/mix_config.h"

#include <cmath>
#include <string>

#include "blockmix/error.h"

namespace blockmix {

std::string_view PolicyName(DonorShortagePolicy policy) {
  return policy == DonorShortagePolicy::kError ? "error"
                                               : "sample_with_replacement";
}

std::string_view PolicyName(SingletonLabelPolicy policy) {
  return policy == SingletonLabelPolicy::kError ? "error"
                                                : "passthrough_with_warning";
}

DonorShortagePolicy ParseDonorShortagePolicy(std::string_view name) {
  if (name == "error") return DonorShortagePolicy::kError;
  if (name == "sample_with_replacement") {
    return DonorShortagePolicy::kSampleWithReplacement;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown donor shortage policy '" + std::string(name) + "'");
}

SingletonLabelPolicy ParseSingletonLabelPolicy(std::string_view name) {
  if (name == "error") return SingletonLabelPolicy::kError;
  if (name == "passthrough_with_warning") {
    return SingletonLabelPolicy::kPassthroughWithWarning;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown singleton label policy '" + std::string(name) + "'");
}

MixConfig MakeMixConfig(ImageSize canonical, int block_len, int block_wid) {
  MixConfig config;
  config.partition = DerivePartition(canonical, block_len, block_wid);
  return config;
}

void ValidateMixConfig(const MixConfig& config) {
  if (config.rounds < 1) {
    throw Error(ErrorCode::kInvalidArgument, "rounds must be >= 1");
  }
  if (config.donors_per_image < 1) {
    throw Error(ErrorCode::kInvalidArgument, "donors per image must be >= 1");
  }
  if (!(config.replace_prob >= 0.0 && config.replace_prob <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "replacement probability must lie in [0, 1]");
  }
  const PartitionSpec& p = config.partition;
  if (p != DerivePartition(p.image_size(), p.block_len, p.block_wid)) {
    throw Error(ErrorCode::kInvalidArgument,
                "partition is inconsistent with the canonical size");
  }
}

}  // namespace blockmix
