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


#include "blockmix/dataset_io.h"

#include <fstream>

#include <gtest/gtest.h>

#include "blockmix/error.h"
#include "blockmix/manifest.h"
#include "test_util.h"

namespace blockmix {
namespace {

namespace fs = std::filesystem;
using ::blockmix::testing::RandomImage;
using ::blockmix::testing::ReadTree;
using ::blockmix::testing::TempDir;
using ::blockmix::testing::WriteTree;

Dataset FiveImages(ImageSize size) {
  Dataset d;
  for (int i = 0; i < 3; ++i) {
    d.push_back(RandomImage(size, "male",
                            "male/m" + std::to_string(i) + ".png", i));
  }
  for (int i = 0; i < 2; ++i) {
    d.push_back(RandomImage(size, "female",
                            "female/f" + std::to_string(i) + ".png", 10 + i));
  }
  return d;
}

void Touch(const fs::path& path, const std::string& bytes) {
  fs::create_directories(path.parent_path());
  std::ofstream(path, std::ios::binary) << bytes;
}

TEST(SupportedPathTest, Extensions) {
  EXPECT_TRUE(IsSupportedImagePath("a/b.png"));
  EXPECT_TRUE(IsSupportedImagePath("a/b.JPG"));
  EXPECT_TRUE(IsSupportedImagePath("a/b.jpeg"));
  EXPECT_TRUE(IsSupportedImagePath("a/b.Bmp"));
  EXPECT_FALSE(IsSupportedImagePath("a/b.gif"));
  EXPECT_FALSE(IsSupportedImagePath("a/b"));
}

TEST(LoadDatasetTest, CensusAndOrdering) {
  TempDir dir;
  WriteTree(FiveImages({20, 20}), dir.path());
  Touch(dir.path() / kManifestFileName, "{}");
  Touch(dir.path() / "female" / ".DS_Store", "junk");
  const Dataset d = LoadDataset(dir.path(), {20, 20});
  ASSERT_EQ(d.size(), 5u);
  const auto census = Census(d);
  ASSERT_EQ(census.size(), 2u);
  EXPECT_EQ(census[0], (LabelCount{"female", 2}));
  EXPECT_EQ(census[1], (LabelCount{"male", 3}));
  EXPECT_EQ(d[0].source_id(), "female/f0.png");
  EXPECT_EQ(d[4].source_id(), "male/m2.png");
  EXPECT_EQ(d[4].label(), "male");
  const Dataset again = LoadDataset(dir.path(), {20, 20}, 3);
  EXPECT_EQ(again, d);
}

TEST(LoadDatasetTest, ResizesToCanonical) {
  TempDir dir;
  const Dataset src = FiveImages({30, 18});
  WriteTree(src, dir.path());
  const Dataset d = LoadDataset(dir.path(), {16, 16});
  for (const auto& image : d) EXPECT_EQ(image.size(), (ImageSize{16, 16}));
  EXPECT_EQ(d[0].pixels().size(), 16u * 16u * 3u);
}

TEST(LoadDatasetTest, CorruptFileNamesTheFile) {
  TempDir dir;
  WriteTree(FiveImages({8, 8}), dir.path());
  Touch(dir.path() / "male" / "broken.png", "definitely not a png");
  try {
    LoadDataset(dir.path(), {8, 8});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDecodeError);
    EXPECT_NE(std::string(e.what()).find("broken.png"), std::string::npos);
  }
}

TEST(LoadDatasetTest, UnsupportedFile) {
  TempDir dir;
  WriteTree(FiveImages({8, 8}), dir.path());
  Touch(dir.path() / "male" / "notes.txt", "hello");
  try {
    LoadDataset(dir.path(), {8, 8});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedFormat);
  }
}

TEST(LoadDatasetTest, EmptyAndMissing) {
  TempDir dir;
  EXPECT_THROW(LoadDataset(dir.path(), {8, 8}), Error);
  fs::create_directories(dir.path() / "label");
  try {
    LoadDataset(dir.path(), {8, 8});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyDataset);
  }
  EXPECT_THROW(LoadDataset(dir.path() / "nope", {8, 8}), Error);
}

TEST(LoadDatasetTest, DecodesBmpAsRgb) {
  TempDir dir;
  const LabeledImage red = testing::UniformImage({16, 16}, 250, 10, 10, "c",
                                                 "c/r.png");
  WriteTree({red}, dir.path());
  // Hand-built 24-bit BMP, stored B,G,R on disk.
  std::vector<std::uint8_t> bmp(54 + 16 * 16 * 3, 0);
  auto put32 = [&](int at, std::uint32_t v) {
    for (int k = 0; k < 4; ++k) bmp[at + k] = (v >> (8 * k)) & 0xff;
  };
  bmp[0] = 'B';
  bmp[1] = 'M';
  put32(2, bmp.size());
  put32(10, 54);
  put32(14, 40);
  put32(18, 16);
  put32(22, 16);
  bmp[26] = 1;
  bmp[28] = 24;
  for (int i = 0; i < 16 * 16; ++i) {
    bmp[54 + 3 * i] = 30;       // B
    bmp[54 + 3 * i + 1] = 20;   // G
    bmp[54 + 3 * i + 2] = 200;  // R
  }
  Touch(dir.path() / "c" / "s.bmp", std::string(bmp.begin(), bmp.end()));
  const Dataset d = LoadDataset(dir.path(), {16, 16});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[1].source_id(), "c/s.bmp");
  EXPECT_EQ(d[1].at(3, 3, 0), 200);
  EXPECT_EQ(d[1].at(3, 3, 2), 30);
  EXPECT_EQ(d[0].at(0, 0, 0), 250);
}

TEST(SaveDatasetTest, LosslessRoundTrip) {
  TempDir dir;
  const Dataset src = FiveImages({24, 24});
  const auto paths = SaveDataset(src, dir.path());
  EXPECT_EQ(paths.size(), 5u);
  EXPECT_EQ(ReadTree(dir.path()).size(), 5u);
  const Dataset back = LoadDataset(dir.path(), {24, 24});
  Dataset sorted = src;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) {
              return a.source_id() < b.source_id();
            });
  EXPECT_EQ(back, sorted);
}

TEST(OutputRelpathsTest, CollisionSuffixes) {
  Dataset d;
  d.push_back(RandomImage({4, 4}, "a", "a/x.jpg", 1));
  d.push_back(RandomImage({4, 4}, "a", "a/x.png", 2));
  d.push_back(RandomImage({4, 4}, "a", "a/x_1.png", 3));
  d.push_back(RandomImage({4, 4}, "a", "a/x.bmp", 4));
  d.push_back(RandomImage({4, 4}, "b", "b/x.jpg", 5));
  const auto paths = OutputRelpaths(d);
  EXPECT_EQ(paths, (std::vector<std::string>{"a/x.png", "a/x_1.png",
                                             "a/x_1_1.png", "a/x_2.png",
                                             "b/x.png"}));
}

}  // namespace
}  // namespace blockmix
