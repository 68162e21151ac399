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

#include "blockmix/partition.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include "blockmix/error.h"

namespace blockmix {
namespace {

void CheckImage(const LabeledImage& image, const PartitionSpec& spec) {
  if (image.size() != spec.image_size()) {
    throw Error(ErrorCode::kShapeMismatch,
                "image '" + image.source_id() + "' is " +
                    FormatImageSize(image.size()) + ", partition expects " +
                    FormatImageSize(spec.image_size()));
  }
}

void CheckPos(const PartitionSpec& spec, GridPos pos) {
  if (pos.row < 0 || pos.row >= spec.rows || pos.col < 0 ||
      pos.col >= spec.cols) {
    throw Error(ErrorCode::kOutOfGrid,
                "block (" + std::to_string(pos.row) + "," +
                    std::to_string(pos.col) + ") outside " +
                    std::to_string(spec.rows) + "x" +
                    std::to_string(spec.cols) + " grid");
  }
}

}  // namespace

PartitionSpec DerivePartition(ImageSize canonical, int block_len,
                              int block_wid) {
  if (canonical.width < 1 || canonical.height < 1 || block_len < 1 ||
      block_wid < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "partition sizes must be positive");
  }
  if (canonical.width % block_len != 0) {
    throw Error(ErrorCode::kNonDivisible,
                "block length " + std::to_string(block_len) +
                    " does not divide image length " +
                    std::to_string(canonical.width));
  }
  if (canonical.height % block_wid != 0) {
    throw Error(ErrorCode::kNonDivisible,
                "block width " + std::to_string(block_wid) +
                    " does not divide image width " +
                    std::to_string(canonical.height));
  }
  PartitionSpec spec;
  spec.block_len = block_len;
  spec.block_wid = block_wid;
  spec.img_len = canonical.width;
  spec.img_wid = canonical.height;
  spec.rows = canonical.height / block_wid;
  spec.cols = canonical.width / block_len;
  spec.block_count = spec.rows * spec.cols;
  return spec;
}

PartitionSpec PartitionForBlockCount(ImageSize canonical, int block_count,
                                     GridShape shape) {
  if (block_count < 1) {
    throw Error(ErrorCode::kInvalidArgument, "block count must be positive");
  }
  int best_cols = 0;
  int best_gap = 0;
  for (int cols = 1; cols <= block_count; ++cols) {
    if (block_count % cols != 0) continue;
    const int rows = block_count / cols;
    if (canonical.width % cols != 0 || canonical.height % rows != 0) continue;
    const int gap = shape == GridShape::kSquare ? std::abs(rows - cols) : 0;
    if (best_cols == 0 || gap <= best_gap) {
      best_cols = cols;
      best_gap = gap;
    }
  }
  if (best_cols == 0) {
    throw Error(ErrorCode::kNonDivisible,
                "no even grid of " + std::to_string(block_count) +
                    " blocks fits " + FormatImageSize(canonical));
  }
  const int rows = block_count / best_cols;
  return DerivePartition(canonical, canonical.width / best_cols,
                         canonical.height / rows);
}

Block ExtractBlock(const LabeledImage& image, const PartitionSpec& spec,
                   GridPos pos) {
  CheckImage(image, spec);
  CheckPos(spec, pos);
  Block block;
  block.pos = pos;
  block.len = spec.block_len;
  block.wid = spec.block_wid;
  const std::size_t row_bytes =
      static_cast<std::size_t>(spec.block_len) * kChannels;
  block.pixels.resize(row_bytes * spec.block_wid);
  const auto src = image.pixels();
  const int y0 = pos.row * spec.block_wid;
  const int x0 = pos.col * spec.block_len;
  for (int y = 0; y < spec.block_wid; ++y) {
    std::memcpy(block.pixels.data() + y * row_bytes,
                src.data() + image.offset(y0 + y, x0), row_bytes);
  }
  return block;
}

void WriteBlockInPlace(LabeledImage& image, const PartitionSpec& spec,
                       GridPos pos, const Block& block) {
  CheckImage(image, spec);
  CheckPos(spec, pos);
  const std::size_t row_bytes =
      static_cast<std::size_t>(spec.block_len) * kChannels;
  if (block.len != spec.block_len || block.wid != spec.block_wid ||
      block.pixels.size() != row_bytes * spec.block_wid) {
    throw Error(ErrorCode::kShapeMismatch,
                "block is " + std::to_string(block.len) + "x" +
                    std::to_string(block.wid) + ", partition expects " +
                    std::to_string(spec.block_len) + "x" +
                    std::to_string(spec.block_wid));
  }
  auto dst = image.mutable_pixels();
  const int y0 = pos.row * spec.block_wid;
  const int x0 = pos.col * spec.block_len;
  for (int y = 0; y < spec.block_wid; ++y) {
    std::memcpy(dst.data() + image.offset(y0 + y, x0),
                block.pixels.data() + y * row_bytes, row_bytes);
  }
}

LabeledImage WriteBlock(const LabeledImage& image, const PartitionSpec& spec,
                        GridPos pos, const Block& block) {
  LabeledImage out = image;
  WriteBlockInPlace(out, spec, pos, block);
  return out;
}

void CopyBlock(const LabeledImage& src, LabeledImage& dst,
               const PartitionSpec& spec, GridPos pos) {
  const std::size_t row_bytes =
      static_cast<std::size_t>(spec.block_len) * kChannels;
  const int y0 = pos.row * spec.block_wid;
  const int x0 = pos.col * spec.block_len;
  const auto from = src.pixels();
  auto to = dst.mutable_pixels();
  for (int y = 0; y < spec.block_wid; ++y) {
    const std::size_t off = src.offset(y0 + y, x0);
    std::memcpy(to.data() + off, from.data() + off, row_bytes);
  }
}

}  // namespace blockmix
