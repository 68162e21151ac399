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

#ifndef BLOCKMIX_PARTITION_H_
#define BLOCKMIX_PARTITION_H_

#include <cstdint>
#include <vector>

#include "blockmix/image.h"

namespace blockmix {

// Even grid partition of a canonical image into rows x cols blocks of
// block_len x block_wid pixels. Only DerivePartition builds valid specs.
struct PartitionSpec {
  int block_len = 0;  // horizontal extent of a block (L_b)
  int block_wid = 0;  // vertical extent of a block (W_b)
  int img_len = 0;    // canonical width (L_i)
  int img_wid = 0;    // canonical height (W_i)
  int rows = 0;       // img_wid / block_wid
  int cols = 0;       // img_len / block_len
  int block_count = 0;

  ImageSize image_size() const { return {img_len, img_wid}; }
  std::int64_t pixel_count() const {
    return static_cast<std::int64_t>(img_len) * img_wid;
  }
  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};

struct GridPos {
  int row = 0;
  int col = 0;
  friend bool operator==(const GridPos&, const GridPos&) = default;
};

// One block_wid x block_len x 3 tile cut from an image.
struct Block {
  GridPos pos;
  int len = 0;
  int wid = 0;
  std::vector<std::uint8_t> pixels;

  friend bool operator==(const Block&, const Block&) = default;
};

// Throws Error(kInvalidArgument) for non-positive inputs and
// Error(kNonDivisible) when a block side does not divide the image side.
PartitionSpec DerivePartition(ImageSize canonical, int block_len,
                              int block_wid);

enum class GridShape {
  kSquare,  // rows*cols with the smallest |rows-cols|, ties to more columns
  kStrips,  // as many columns as possible (full-height strips when it fits)
};

// Picks (block_len, block_wid) giving exactly `block_count` blocks on
// `canonical`. Throws Error(kNonDivisible) if no even grid exists.
PartitionSpec PartitionForBlockCount(ImageSize canonical, int block_count,
                                     GridShape shape = GridShape::kSquare);

Block ExtractBlock(const LabeledImage& image, const PartitionSpec& spec,
                   GridPos pos);

// Returns a copy of `image` with the block at `pos` overwritten.
LabeledImage WriteBlock(const LabeledImage& image, const PartitionSpec& spec,
                        GridPos pos, const Block& block);

// In-place variant used by the mixing kernels.
void WriteBlockInPlace(LabeledImage& image, const PartitionSpec& spec,
                       GridPos pos, const Block& block);

// Copies the same-position block from `src` into `dst` without an
// intermediate Block. Both images must have the spec's canonical size.
void CopyBlock(const LabeledImage& src, LabeledImage& dst,
               const PartitionSpec& spec, GridPos pos);

}  // namespace blockmix

#endif  // BLOCKMIX_PARTITION_H_
