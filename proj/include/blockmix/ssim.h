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

#ifndef BLOCKMIX_SSIM_H_
#define BLOCKMIX_SSIM_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "blockmix/image.h"

namespace blockmix {

// Gaussian-window SSIM on the Rec. 601 luminance plane, averaged over every
// valid (fully inside) window position.
struct SsimParams {
  int window = 11;
  double sigma = 1.5;
  double dynamic_range = 255.0;
  double k1 = 0.01;
  double k2 = 0.03;

  double c1() const { return (k1 * dynamic_range) * (k1 * dynamic_range); }
  double c2() const { return (k2 * dynamic_range) * (k2 * dynamic_range); }
};

// 0.299 R + 0.587 G + 0.114 B, unrounded, row-major.
std::vector<double> Luminance(const LabeledImage& image);

// Normalised 1-D Gaussian taps; the 2-D window is their outer product.
std::vector<double> GaussianTaps(int window, double sigma);

// Throws Error(kShapeMismatch) for differing sizes and Error(kTooSmall) if
// either side is below the window size.
double Ssim(const LabeledImage& a, const LabeledImage& b,
            const SsimParams& params = {});

struct SsimEntry {
  std::string source_id;
  double ssim = 0.0;
};

struct SsimReport {
  std::vector<SsimEntry> per_image;
  double mean_ssim = 0.0;
  // Echo of the mixing run when known.
  std::optional<int> block_count;
  std::optional<double> replace_prob;
  std::optional<int> rounds;
};

// Pairs `mixed` with `originals` by source_id; entries follow the order of
// `originals`. Pairs are evaluated on up to `workers` OpenMP threads.
// Throws Error(kPairingMismatch) when the id sets differ.
SsimReport DatasetSsim(const Dataset& originals, const Dataset& mixed,
                       const SsimParams& params = {}, int workers = 1);

// Line-delimited key=value text, tab separated:
//   # blockmix ssim report v1
//   image<TAB>source_id=<id><TAB>ssim=<value>
//   summary<TAB>count=<n><TAB>mean_ssim=<v><TAB>n_b=<v|NA><TAB>p=<v|NA><TAB>n_t=<v|NA>
void WriteSsimReport(const SsimReport& report, std::ostream& out);
// Throws Error(kParseError).
SsimReport ReadSsimReport(std::istream& in);

}  // namespace blockmix

#endif  // BLOCKMIX_SSIM_H_
