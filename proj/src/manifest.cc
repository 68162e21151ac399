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

#include "blockmix/manifest.h"

#include <fstream>
#include <map>
#include <sstream>

#include "blockmix/error.h"
#include "json.hpp"

namespace blockmix {
namespace {

using Json = nlohmann::ordered_json;

Json MixToJson(const MixConfig& c) {
  const PartitionSpec& p = c.partition;
  return Json{
      {"rounds", c.rounds},
      {"donors_per_image", c.donors_per_image},
      {"replace_prob", c.replace_prob},
      {"canonical_size", {{"len", p.img_len}, {"wid", p.img_wid}}},
      {"partition",
       {{"block_len", p.block_len},
        {"block_wid", p.block_wid},
        {"rows", p.rows},
        {"cols", p.cols},
        {"block_count", p.block_count}}},
      {"donor_shortage_policy", PolicyName(c.donor_shortage_policy)},
      {"singleton_label_policy", PolicyName(c.singleton_label_policy)},
      // Fixed procedure choices, echoed so a reader need not know the
      // tool version to interpret the run.
      {"resize_filter", "bilinear"},
      {"donor_pool", "original"},
      {"self_excluded", true},
      {"rounds_compound", true},
      {"mask", "bernoulli_per_block_row_major"},
  };
}

MixConfig MixFromJson(const Json& j, std::uint64_t seed) {
  const Json& size = j.at("canonical_size");
  const Json& part = j.at("partition");
  MixConfig c = MakeMixConfig(
      ImageSize{size.at("len").get<int>(), size.at("wid").get<int>()},
      part.at("block_len").get<int>(), part.at("block_wid").get<int>());
  if (c.partition.rows != part.at("rows").get<int>() ||
      c.partition.cols != part.at("cols").get<int>() ||
      c.partition.block_count != part.at("block_count").get<int>()) {
    throw Error(ErrorCode::kParseError, "partition grid is inconsistent");
  }
  c.rounds = j.at("rounds").get<int>();
  c.donors_per_image = j.at("donors_per_image").get<int>();
  c.replace_prob = j.at("replace_prob").get<double>();
  c.master_seed = seed;
  c.donor_shortage_policy = ParseDonorShortagePolicy(
      j.at("donor_shortage_policy").get<std::string>());
  c.singleton_label_policy = ParseSingletonLabelPolicy(
      j.at("singleton_label_policy").get<std::string>());
  ValidateMixConfig(c);
  return c;
}

Json AugmentToJson(const AugmentRecord& a) {
  Json j{{"flip", a.flip}};
  j["rotation_degrees"] =
      a.rotation_degrees ? Json(*a.rotation_degrees) : Json(nullptr);
  j["brightness_factor"] =
      a.brightness_factor ? Json(*a.brightness_factor) : Json(nullptr);
  j["emit_all_variants"] = a.emit_all_variants;
  j["input_count"] = a.input_count;
  j["output_count"] = a.output_count;
  return j;
}

AugmentRecord AugmentFromJson(const Json& j) {
  AugmentRecord a;
  a.flip = j.at("flip").get<bool>();
  if (!j.at("rotation_degrees").is_null()) {
    a.rotation_degrees = j.at("rotation_degrees").get<double>();
  }
  if (!j.at("brightness_factor").is_null()) {
    a.brightness_factor = j.at("brightness_factor").get<double>();
  }
  a.emit_all_variants = j.at("emit_all_variants").get<bool>();
  a.input_count = j.at("input_count").get<std::int64_t>();
  a.output_count = j.at("output_count").get<std::int64_t>();
  return a;
}

Json ProvenanceToJson(const MixProvenance& p) {
  Json outcomes = Json::array();
  for (const BlockOutcome& o : p.outcomes) outcomes.push_back(o.donor_slot);
  return Json{{"target_id", p.target_id},
              {"round", p.round},
              {"donor_ids", p.donor_ids},
              {"outcomes", std::move(outcomes)}};
}

MixProvenance ProvenanceFromJson(const Json& j) {
  MixProvenance p;
  p.target_id = j.at("target_id").get<std::string>();
  p.round = j.at("round").get<int>();
  p.donor_ids = j.at("donor_ids").get<std::vector<std::string>>();
  for (const Json& o : j.at("outcomes")) {
    const int slot = o.get<int>();
    if (slot < BlockOutcome::kKept ||
        slot >= static_cast<int>(p.donor_ids.size())) {
      throw Error(ErrorCode::kParseError,
                  "outcome slot " + std::to_string(slot) + " out of range");
    }
    p.outcomes.push_back(BlockOutcome{slot});
  }
  return p;
}

}  // namespace

std::vector<LabelCount> Census(const Dataset& dataset) {
  std::map<std::string, std::int64_t> counts;
  for (const LabeledImage& image : dataset) ++counts[image.label()];
  std::vector<LabelCount> census;
  for (const auto& [label, count] : counts) census.push_back({label, count});
  return census;
}

std::string SerializeManifest(const MixManifest& manifest,
                              bool include_audit) {
  Json j;
  j["format_version"] = manifest.format_version;
  j["tool_version"] = manifest.tool_version;
  if (manifest.mix) {
    j["master_seed"] = manifest.mix->master_seed;
    j["mix"] = MixToJson(*manifest.mix);
  } else {
    j["master_seed"] = nullptr;
    j["mix"] = nullptr;
  }
  Json census = Json::array();
  for (const LabelCount& c : manifest.census) {
    census.push_back(Json{{"label", c.label}, {"count", c.count}});
  }
  j["census"] = std::move(census);
  if (manifest.augmentation) {
    j["augmentation"] = AugmentToJson(*manifest.augmentation);
  }
  if (include_audit && manifest.audit) {
    Json audit = Json::array();
    for (const MixProvenance& p : *manifest.audit) {
      audit.push_back(ProvenanceToJson(p));
    }
    j["audit"] = std::move(audit);
  }
  return j.dump(2) + "\n";
}

MixManifest ParseManifest(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  try {
    if (!j.is_object() || !j.contains("format_version")) {
      throw Error(ErrorCode::kParseError, "missing format_version");
    }
    const int version = j.at("format_version").get<int>();
    if (version != kManifestFormatVersion) {
      throw Error(ErrorCode::kVersionMismatch,
                  "manifest format_version " + std::to_string(version) +
                      ", this tool reads " +
                      std::to_string(kManifestFormatVersion));
    }
    MixManifest m;
    m.format_version = version;
    m.tool_version = j.at("tool_version").get<std::string>();
    if (!j.at("mix").is_null()) {
      m.mix = MixFromJson(j.at("mix"), j.at("master_seed").get<std::uint64_t>());
    }
    for (const Json& c : j.at("census")) {
      m.census.push_back(
          {c.at("label").get<std::string>(), c.at("count").get<std::int64_t>()});
    }
    if (j.contains("augmentation")) {
      m.augmentation = AugmentFromJson(j.at("augmentation"));
    }
    if (j.contains("audit")) {
      std::vector<MixProvenance> audit;
      for (const Json& p : j.at("audit")) audit.push_back(ProvenanceFromJson(p));
      m.audit = std::move(audit);
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kVersionMismatch ||
        e.code() == ErrorCode::kParseError) {
      throw;
    }
    throw Error(ErrorCode::kParseError, e.what());
  }
}

void WriteManifest(const MixManifest& manifest,
                   const std::filesystem::path& path, bool include_audit) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << SerializeManifest(manifest, include_audit);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  }
}

MixManifest ReadManifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return ParseManifest(text.str());
}

}  // namespace blockmix
