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

// Directory-per-label datasets:
//
//   root/<label>/<image>.{png,jpg,jpeg,bmp}
//
// Files directly under root (such as mixmanifest.json) and names starting
// with '.' are ignored. Any other file inside a label directory must be a
// supported image.

#ifndef BLOCKMIX_DATASET_IO_H_
#define BLOCKMIX_DATASET_IO_H_

#include <filesystem>
#include <string>
#include <vector>

#include "blockmix/image.h"

namespace blockmix {

bool IsSupportedImagePath(const std::filesystem::path& path);

// Decodes any supported file to 8-bit RGB. Throws Error(kDecodeError) or
// Error(kUnsupportedFormat), naming the path.
LabeledImage DecodeImageFile(const std::filesystem::path& path,
                             std::string label, std::string source_id);

// Writes a lossless PNG. Throws Error(kIoError).
void WritePng(const LabeledImage& image, const std::filesystem::path& path);

// Loads, labels by directory and resizes every image (bilinear) to
// `canonical`. source_id is the '/'-separated path relative to root and
// images come in lexicographic order of that id.
// Throws Error(kEmptyDataset), Error(kDecodeError),
// Error(kUnsupportedFormat) or Error(kIoError).
Dataset LoadDataset(const std::filesystem::path& root, ImageSize canonical,
                    int workers = 1);

// Relative output paths for `dataset`: "<label>/<stem>.png". When two
// images map to the same path, later ones (in dataset order) get
// "<stem>_1.png", "<stem>_2.png", ... skipping names already taken.
std::vector<std::string> OutputRelpaths(const Dataset& dataset);

// Mirrors the label tree under out_root as PNG files named by
// OutputRelpaths. Returns those relative paths. Throws Error(kIoError).
std::vector<std::string> SaveDataset(const Dataset& dataset,
                                     const std::filesystem::path& out_root);

}  // namespace blockmix

#endif  // BLOCKMIX_DATASET_IO_H_
