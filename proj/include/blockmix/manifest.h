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

#ifndef BLOCKMIX_MANIFEST_H_
#define BLOCKMIX_MANIFEST_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "blockmix/image.h"
#include "blockmix/mix_config.h"

namespace blockmix {

inline constexpr int kManifestFormatVersion = 1;
inline constexpr char kManifestFileName[] = "mixmanifest.json";
inline constexpr char kToolVersion[] = "1.0.0";

// Outcome of one grid position in one (target, round) mixing step.
struct BlockOutcome {
  static constexpr int kKept = -1;
  int donor_slot = kKept;  // index into MixProvenance::donor_ids

  bool replaced() const { return donor_slot != kKept; }
  friend bool operator==(const BlockOutcome&, const BlockOutcome&) = default;
};

// Audit record for one target image and one round. `outcomes` is row-major
// over the partition grid and always holds block_count entries.
struct MixProvenance {
  std::string target_id;
  int round = 0;
  std::vector<std::string> donor_ids;
  std::vector<BlockOutcome> outcomes;

  friend bool operator==(const MixProvenance&, const MixProvenance&) = default;
};

struct LabelCount {
  std::string label;
  std::int64_t count = 0;
  friend bool operator==(const LabelCount&, const LabelCount&) = default;
};

struct AugmentRecord {
  bool flip = false;
  std::optional<double> rotation_degrees;
  std::optional<double> brightness_factor;
  bool emit_all_variants = true;
  std::int64_t input_count = 0;
  std::int64_t output_count = 0;
  friend bool operator==(const AugmentRecord&, const AugmentRecord&) = default;
};

// Reproducibility record written next to every output tree. The audit
// section carries donor identities, which help a restoring adversary, so it
// is written only on explicit request.
struct MixManifest {
  int format_version = kManifestFormatVersion;
  std::string tool_version = kToolVersion;
  std::optional<MixConfig> mix;  // absent for trees that were never mixed
  std::vector<LabelCount> census;
  std::optional<AugmentRecord> augmentation;
  std::optional<std::vector<MixProvenance>> audit;

  friend bool operator==(const MixManifest&, const MixManifest&) = default;
};

// Labels in lexicographic order with their image counts.
std::vector<LabelCount> Census(const Dataset& dataset);

std::string SerializeManifest(const MixManifest& manifest, bool include_audit);
// Throws Error(kParseError) or Error(kVersionMismatch).
MixManifest ParseManifest(const std::string& text);

// Throws Error(kIoError) on write failure.
void WriteManifest(const MixManifest& manifest,
                   const std::filesystem::path& path, bool include_audit);
MixManifest ReadManifest(const std::filesystem::path& path);

}  // namespace blockmix

#endif  // BLOCKMIX_MANIFEST_H_
