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

#include <omp.h>

#include <algorithm>
#include <cctype>
#include <exception>
#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#include <unordered_set>

#include "blockmix/error.h"

namespace blockmix {
namespace fs = std::filesystem;
namespace {

std::string LowerExtension(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext;
}

bool IsHidden(const fs::path& path) {
  const std::string name = path.filename().string();
  return !name.empty() && name[0] == '.';
}

struct PendingImage {
  fs::path path;
  std::string label;
  std::string source_id;
};

}  // namespace

bool IsSupportedImagePath(const fs::path& path) {
  const std::string ext = LowerExtension(path);
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg" || ext == ".bmp";
}

LabeledImage DecodeImageFile(const fs::path& path, std::string label,
                             std::string source_id) {
  if (!IsSupportedImagePath(path)) {
    throw Error(ErrorCode::kUnsupportedFormat, path.string());
  }
  const cv::Mat bgr = cv::imread(path.string(), cv::IMREAD_COLOR);
  if (bgr.empty() || bgr.type() != CV_8UC3) {
    throw Error(ErrorCode::kDecodeError, path.string());
  }
  std::vector<std::uint8_t> rgb(static_cast<std::size_t>(bgr.rows) * bgr.cols *
                                kChannels);
  std::size_t k = 0;
  for (int y = 0; y < bgr.rows; ++y) {
    const auto* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < bgr.cols; ++x) {
      rgb[k++] = row[x][2];
      rgb[k++] = row[x][1];
      rgb[k++] = row[x][0];
    }
  }
  return LabeledImage(ImageSize{bgr.cols, bgr.rows}, std::move(rgb),
                      std::move(label), std::move(source_id));
}

void WritePng(const LabeledImage& image, const fs::path& path) {
  cv::Mat bgr(image.height(), image.width(), CV_8UC3);
  for (int y = 0; y < image.height(); ++y) {
    auto* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < image.width(); ++x) {
      row[x] = cv::Vec3b(image.at(y, x, 2), image.at(y, x, 1),
                         image.at(y, x, 0));
    }
  }
  bool ok = false;
  try {
    ok = cv::imwrite(path.string(), bgr);
  } catch (const cv::Exception&) {
    ok = false;
  }
  if (!ok) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
}

Dataset LoadDataset(const fs::path& root, ImageSize canonical, int workers) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error(ErrorCode::kIoError, "not a directory: " + root.string());
  }
  std::vector<fs::path> label_dirs;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory() && !IsHidden(entry.path())) {
      label_dirs.push_back(entry.path());
    }
  }
  if (label_dirs.empty()) {
    throw Error(ErrorCode::kEmptyDataset,
                "no label directories under " + root.string());
  }

  std::vector<PendingImage> pending;
  for (const fs::path& dir : label_dirs) {
    const std::string label = dir.filename().string();
    std::size_t found = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (!entry.is_regular_file() || IsHidden(entry.path())) continue;
      if (!IsSupportedImagePath(entry.path())) {
        throw Error(ErrorCode::kUnsupportedFormat, entry.path().string());
      }
      pending.push_back({entry.path(), label,
                         label + "/" + entry.path().filename().string()});
      ++found;
    }
    if (found == 0) {
      throw Error(ErrorCode::kEmptyDataset,
                  "label directory has no images: " + dir.string());
    }
  }
  std::sort(pending.begin(), pending.end(),
            [](const PendingImage& a, const PendingImage& b) {
              return a.source_id < b.source_id;
            });

  Dataset dataset(pending.size());
  std::exception_ptr failure;
#pragma omp parallel for num_threads(std::max(1, workers)) schedule(dynamic)
  for (std::int64_t ii = 0; ii < static_cast<std::int64_t>(pending.size());
       ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    try {
      dataset[i] = ResizeBilinear(
          DecodeImageFile(pending[i].path, pending[i].label,
                          pending[i].source_id),
          canonical);
    } catch (...) {
#pragma omp critical(blockmix_load_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return dataset;
}

std::vector<std::string> OutputRelpaths(const Dataset& dataset) {
  std::unordered_set<std::string> taken;
  std::vector<std::string> paths;
  paths.reserve(dataset.size());
  for (const LabeledImage& image : dataset) {
    const fs::path id(image.source_id());
    const std::string stem = image.label() + "/" + id.stem().string();
    std::string candidate = stem + ".png";
    for (int suffix = 1; taken.count(candidate) != 0; ++suffix) {
      candidate = stem + "_" + std::to_string(suffix) + ".png";
    }
    taken.insert(candidate);
    paths.push_back(std::move(candidate));
  }
  return paths;
}

std::vector<std::string> SaveDataset(const Dataset& dataset,
                                     const fs::path& out_root) {
  const auto relpaths = OutputRelpaths(dataset);
  std::error_code ec;
  for (const LabeledImage& image : dataset) {
    fs::create_directories(out_root / image.label(), ec);
    if (ec) {
      throw Error(ErrorCode::kIoError, "cannot create " +
                                           (out_root / image.label()).string() +
                                           ": " + ec.message());
    }
  }
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    WritePng(dataset[i], out_root / relpaths[i]);
  }
  return relpaths;
}

}  // namespace blockmix
