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

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "blockmix/error.h"
#include "blockmix/synthetic.h"
#include "test_util.h"

namespace blockmix {
namespace {

using ::blockmix::testing::RandomImage;
using ::blockmix::testing::UnexplainedBlocks;

MixConfig Config(ImageSize size, int n_b, double p, int donors, int rounds,
                 std::uint64_t seed = 1) {
  MixConfig config;
  config.partition = PartitionForBlockCount(size, n_b);
  config.replace_prob = p;
  config.donors_per_image = donors;
  config.rounds = rounds;
  config.master_seed = seed;
  return config;
}

Dataset Noise(int count, int labels, ImageSize size, std::uint64_t seed = 3) {
  return SyntheticDataset(count, labels, size, seed,
                          SyntheticKind::kUniformNoise);
}

std::map<std::string, const LabeledImage*> ById(const Dataset& d) {
  std::map<std::string, const LabeledImage*> m;
  for (const auto& image : d) m[image.source_id()] = &image;
  return m;
}

TEST(GenerateMaskTest, DegenerateProbabilities) {
  Rng rng(1);
  const ReplacementMask keep = GenerateMask(64, 0.0, rng);
  const ReplacementMask all = GenerateMask(64, 1.0, rng);
  for (std::size_t i = 0; i < 64; ++i) {
    EXPECT_FALSE(keep[i]);
    EXPECT_TRUE(all[i]);
  }
}

TEST(GenerateMaskTest, HalfRateOverTenThousandDraws) {
  Rng rng(2024);
  const ReplacementMask mask = GenerateMask(10000, 0.5, rng);
  const auto replaced =
      std::count(mask.replace.begin(), mask.replace.end(), 1);
  EXPECT_GE(replaced, 4800);
  EXPECT_LE(replaced, 5200);
}

TEST(GenerateMaskTest, RejectsBadInput) {
  Rng rng(1);
  EXPECT_THROW(GenerateMask(0, 0.5, rng), Error);
  EXPECT_THROW(GenerateMask(4, 1.5, rng), Error);
  EXPECT_THROW(GenerateMask(4, -0.1, rng), Error);
}

TEST(SelectDonorSlotsTest, DistinctWhenEnoughCandidates) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const auto slots = SelectDonorSlots(30, 10, false, rng);
    ASSERT_EQ(slots.size(), 10u);
    EXPECT_EQ(std::set<std::size_t>(slots.begin(), slots.end()).size(), 10u);
    for (const auto s : slots) EXPECT_LT(s, 30u);
  }
}

TEST(SelectDonorSlotsTest, ExactCountTakesEveryCandidate) {
  Rng rng(4);
  auto slots = SelectDonorSlots(6, 6, false, rng);
  std::sort(slots.begin(), slots.end());
  EXPECT_EQ(slots, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
}

TEST(SelectDonorSlotsTest, ShortageErrorsOrFills) {
  Rng rng(4);
  try {
    SelectDonorSlots(3, 5, false, rng);
    FAIL() << "expected DonorShortage";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDonorShortage);
  }
  const auto slots = SelectDonorSlots(3, 5, true, rng);
  ASSERT_EQ(slots.size(), 5u);
  EXPECT_EQ(std::set<std::size_t>(slots.begin(), slots.begin() + 3).size(),
            3u);
  for (const auto s : slots) EXPECT_LT(s, 3u);
}

TEST(SelectDonorSlotsTest, RoughlyUniform) {
  std::vector<int> hits(10, 0);
  for (std::uint64_t seed = 0; seed < 5000; ++seed) {
    Rng rng(seed);
    for (const auto s : SelectDonorSlots(10, 3, false, rng)) ++hits[s];
  }
  // 1500 expected per slot.
  for (const int h : hits) {
    EXPECT_GT(h, 1350);
    EXPECT_LT(h, 1650);
  }
}

TEST(MixImageTest, ZeroProbabilityKeepsTarget) {
  const ImageSize size{32, 32};
  const PartitionSpec spec = PartitionForBlockCount(size, 16);
  const LabeledImage target = RandomImage(size, "a", "a/t.png", 1);
  const LabeledImage d1 = RandomImage(size, "a", "a/d1.png", 2);
  const LabeledImage d2 = RandomImage(size, "a", "a/d2.png", 3);
  Rng rng(7);
  const MixedImage out = MixImage(target, {{&d1, &d2}}, spec, 0.0, rng);
  EXPECT_EQ(out.image, target);
  for (const auto& o : out.provenance.outcomes) EXPECT_FALSE(o.replaced());
}

TEST(MixImageTest, FullProbabilitySingleDonorCopiesDonor) {
  const ImageSize size{32, 32};
  const PartitionSpec spec = PartitionForBlockCount(size, 16);
  const LabeledImage target = RandomImage(size, "a", "a/t.png", 1);
  const LabeledImage donor = RandomImage(size, "a", "a/d.png", 2);
  Rng rng(7);
  const MixedImage out = MixImage(target, {{&donor}}, spec, 1.0, rng);
  EXPECT_EQ(out.image.pixels().size(), donor.pixels().size());
  EXPECT_TRUE(std::equal(out.image.pixels().begin(), out.image.pixels().end(),
                         donor.pixels().begin()));
  EXPECT_EQ(out.image.label(), "a");
  EXPECT_EQ(out.image.source_id(), "a/t.png");
}

TEST(MixImageTest, BlocksComeFromTargetOrDonorsAndReplay) {
  const ImageSize size{32, 32};
  const PartitionSpec spec = PartitionForBlockCount(size, 4);
  const LabeledImage target = RandomImage(size, "a", "a/t.png", 1);
  const LabeledImage d1 = RandomImage(size, "a", "a/d1.png", 2);
  const LabeledImage d2 = RandomImage(size, "a", "a/d2.png", 3);
  Rng rng1(99), rng2(99);
  const MixedImage a = MixImage(target, {{&d1, &d2}}, spec, 0.5, rng1);
  const MixedImage b = MixImage(target, {{&d1, &d2}}, spec, 0.5, rng2);
  EXPECT_EQ(UnexplainedBlocks(a.image, target, {&d1, &d2}, spec), 0);
  EXPECT_EQ(a.image, b.image);
  EXPECT_EQ(a.provenance, b.provenance);
  // Provenance names the exact source of each block.
  const LabeledImage* donors[] = {&d1, &d2};
  for (int k = 0; k < spec.block_count; ++k) {
    const GridPos pos{k / spec.cols, k % spec.cols};
    const auto& o = a.provenance.outcomes[k];
    const LabeledImage& src = o.replaced() ? *donors[o.donor_slot] : target;
    EXPECT_EQ(ExtractBlock(a.image, spec, pos), ExtractBlock(src, spec, pos));
  }
}

TEST(MixImageTest, Errors) {
  const ImageSize size{32, 32};
  const PartitionSpec spec = PartitionForBlockCount(size, 4);
  const LabeledImage target = RandomImage(size, "a", "a/t.png", 1);
  const LabeledImage small = RandomImage({16, 16}, "a", "a/s.png", 2);
  const LabeledImage other = RandomImage(size, "b", "b/o.png", 3);
  Rng rng(1);
  try {
    MixImage(target, {}, spec, 0.5, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyDonorSet);
  }
  try {
    MixImage(target, {{&small}}, spec, 0.5, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShapeMismatch);
  }
  EXPECT_THROW(MixImage(target, {{&other}}, spec, 0.5, rng), Error);
}

TEST(MixDatasetTest, ZeroProbabilityIsResizedInput) {
  const Dataset input = Noise(12, 2, {40, 30});
  const MixConfig config = Config({32, 32}, 16, 0.0, 3, 1);
  const MixRun run = MixDataset(input, config);
  ASSERT_EQ(run.images.size(), input.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    EXPECT_EQ(run.images[i], ResizeBilinear(input[i], {32, 32}));
  }
}

TEST(MixDatasetTest, ProvenanceAndLabels) {
  const Dataset input = Noise(40, 2, {32, 32});
  const MixConfig config = Config({32, 32}, 16, 0.5, 3, 1);
  const MixRun run = MixDataset(input, config);
  const auto originals = ById(input);
  ASSERT_TRUE(run.manifest.audit.has_value());
  ASSERT_EQ(run.manifest.audit->size(), input.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    const MixProvenance& rec = (*run.manifest.audit)[i];
    EXPECT_EQ(rec.target_id, input[i].source_id());
    EXPECT_EQ(run.images[i].label(), input[i].label());
    ASSERT_EQ(rec.donor_ids.size(), 3u);
    std::vector<const LabeledImage*> donors;
    for (const auto& id : rec.donor_ids) {
      EXPECT_NE(id, rec.target_id);
      donors.push_back(originals.at(id));
      EXPECT_EQ(donors.back()->label(), input[i].label());
    }
    EXPECT_EQ(
        UnexplainedBlocks(run.images[i], input[i], donors, config.partition),
        0);
  }
}

TEST(MixDatasetTest, RoundsCompoundAgainstOriginalDonors) {
  const Dataset input = Noise(20, 2, {32, 32});
  const MixConfig config = Config({32, 32}, 16, 0.5, 4, 3);
  const MixRun run = MixDataset(input, config);
  const auto originals = ById(input);
  ASSERT_EQ(run.manifest.audit->size(), input.size() * 3);
  for (std::size_t i = 0; i < input.size(); ++i) {
    // Replay the three rounds from the audit on top of the original.
    LabeledImage image = input[i];
    for (int t = 0; t < 3; ++t) {
      const MixProvenance& rec = (*run.manifest.audit)[i * 3 + t];
      EXPECT_EQ(rec.round, t);
      for (int k = 0; k < config.partition.block_count; ++k) {
        const auto& o = rec.outcomes[k];
        if (!o.replaced()) continue;
        const LabeledImage& donor = *originals.at(rec.donor_ids[o.donor_slot]);
        CopyBlock(donor, image, config.partition,
                  {k / config.partition.cols, k % config.partition.cols});
      }
    }
    EXPECT_EQ(image, run.images[i]);
  }
}

TEST(MixDatasetTest, DeterministicAcrossRunsAndWorkers) {
  const Dataset input = Noise(50, 2, {32, 32});
  const MixConfig config = Config({32, 32}, 16, 0.5, 10, 3, 77);
  const MixRun a = MixDataset(input, config);
  const MixRun b = MixDataset(input, config);
  MixOptions many;
  many.workers = 4;
  const MixRun c = MixDataset(input, config, many);
  EXPECT_EQ(a.images, b.images);
  EXPECT_EQ(a.images, c.images);
  EXPECT_EQ(a.manifest, c.manifest);
  EXPECT_EQ(SerializeManifest(a.manifest, true),
            SerializeManifest(c.manifest, true));
}

TEST(MixDatasetTest, IndependentOfInputOrder) {
  const Dataset input = Noise(30, 3, {32, 32});
  Dataset reversed(input.rbegin(), input.rend());
  const MixConfig config = Config({32, 32}, 16, 0.5, 5, 2, 5);
  const MixRun a = MixDataset(input, config);
  const MixRun b = MixDataset(reversed, config);
  const auto by_id = ById(b.images);
  for (const auto& image : a.images) {
    EXPECT_EQ(image, *by_id.at(image.source_id()));
  }
}

TEST(MixDatasetTest, SeedChangesOutput) {
  const Dataset input = Noise(10, 1, {32, 32});
  const MixRun a = MixDataset(input, Config({32, 32}, 16, 0.5, 3, 1, 1));
  const MixRun b = MixDataset(input, Config({32, 32}, 16, 0.5, 3, 1, 2));
  EXPECT_NE(a.images, b.images);
}

TEST(MixDatasetTest, KernelMatchesReference) {
  const Dataset input = Noise(24, 3, {48, 40});
  for (const int rounds : {1, 3}) {
    MixConfig config = Config({32, 32}, 16, 0.5, 4, rounds, 13);
    config.partition = DerivePartition({32, 32}, 8, 16);
    MixOptions options;
    options.workers = 3;
    const MixRun kernel = MixDataset(input, config, options);
    const MixRun reference = MixDatasetReference(input, config);
    EXPECT_EQ(kernel.images, reference.images);
    EXPECT_EQ(kernel.manifest, reference.manifest);
  }
}

TEST(MixDatasetTest, DonorShortagePolicies) {
  const Dataset input = Noise(6, 2, {32, 32});  // 3 per label
  MixConfig config = Config({32, 32}, 4, 0.5, 5, 1);
  try {
    MixDataset(input, config);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDonorShortage);
  }
  config.donor_shortage_policy = DonorShortagePolicy::kSampleWithReplacement;
  const MixRun run = MixDataset(input, config);
  for (const auto& rec : *run.manifest.audit) {
    EXPECT_EQ(rec.donor_ids.size(), 5u);
    for (const auto& id : rec.donor_ids) EXPECT_NE(id, rec.target_id);
  }
}

TEST(MixDatasetTest, SingletonLabelPolicies) {
  Dataset input = Noise(6, 1, {32, 32});
  input.push_back(RandomImage({32, 32}, "lonely", "lonely/x.png", 5));
  MixConfig config = Config({32, 32}, 4, 1.0, 2, 1);
  try {
    MixDataset(input, config);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingletonLabel);
  }
  config.singleton_label_policy = SingletonLabelPolicy::kPassthroughWithWarning;
  const MixRun run = MixDataset(input, config);
  EXPECT_EQ(run.warnings.size(), 1u);
  EXPECT_EQ(run.images.back(), input.back());
  const MixProvenance& rec = run.manifest.audit->back();
  EXPECT_TRUE(rec.donor_ids.empty());
  for (const auto& o : rec.outcomes) EXPECT_FALSE(o.replaced());
}

TEST(MixDatasetTest, RejectsDuplicateIdsAndEmptyInput) {
  Dataset input = Noise(4, 1, {32, 32});
  input.push_back(input.front());
  EXPECT_THROW(MixDataset(input, Config({32, 32}, 4, 0.5, 2, 1)), Error);
  try {
    MixDataset({}, Config({32, 32}, 4, 0.5, 2, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyDataset);
  }
}

TEST(MixDatasetTest, ReplacedFractionNearP) {
  const Dataset input = Noise(100, 2, {32, 32});
  const MixRun run = MixDataset(input, Config({32, 32}, 256, 0.5, 5, 1));
  long replaced = 0, total = 0;
  for (const auto& rec : *run.manifest.audit) {
    for (const auto& o : rec.outcomes) {
      replaced += o.replaced();
      ++total;
    }
  }
  ASSERT_GE(total, 10000);
  const double rate = static_cast<double>(replaced) / total;
  EXPECT_GE(rate, 0.48);
  EXPECT_LE(rate, 0.52);
}

}  // namespace
}  // namespace blockmix
