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

// Mixing throughput over a grid of dataset sizes (N_IS) and block counts
// (N_b). Datasets are synthetic and in memory; the timed region is one
// MixDataset call. Each grid point runs one discarded warm-up followed by
// `repetitions` timed runs and reports the median. Within one dataset size
// the repetitions cycle through the block counts.

#ifndef BLOCKMIX_BENCH_H_
#define BLOCKMIX_BENCH_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "blockmix/image.h"
#include "blockmix/mix_config.h"
#include "blockmix/partition.h"

namespace blockmix {

struct BenchOptions {
  std::vector<int> sizes;   // N_IS values
  std::vector<int> blocks;  // N_b values, mapped via PartitionForBlockCount
  // Strips make the copy work grow with every N_b step; square grids keep
  // the column count (and so the copy work) flat between some steps.
  ImageSize canonical{256, 256};
  GridShape grid = GridShape::kStrips;
  int labels = 2;
  int donors_per_image = kDefaultDonors;
  int rounds = kDefaultRounds;
  double replace_prob = kDefaultReplaceProb;
  std::uint64_t seed = 0;
  int workers = 1;
  int repetitions = 3;
};

// Produces a canonical-size dataset of `count` images.
using DatasetGenerator =
    std::function<Dataset(int count, int labels, ImageSize size,
                          std::uint64_t seed)>;

// Uniform-noise generator from synthetic.h.
DatasetGenerator UniformNoiseGenerator();

struct BenchPoint {
  int n_is = 0;
  int n_b = 0;
  double seconds = 0.0;  // median of samples
  double images_per_sec = 0.0;
  std::vector<double> samples;
};

struct BenchResult {
  std::vector<BenchPoint> points;  // sizes-major, blocks-minor
  std::string cpu;
  int workers = 1;
  ImageSize canonical;
};

// Throws Error(kInvalidArgument) for empty sweeps or non-positive values
// and Error(kNonDivisible) for a block count the canonical size cannot
// split evenly.
BenchResult RunBench(const BenchOptions& options,
                     const DatasetGenerator& generator = UniformNoiseGenerator());

double Median(std::vector<double> values);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Ordinary least squares. Needs >= 2 points with distinct x.
LinearFit FitLine(std::span<const double> xs, std::span<const double> ys);

bool IsMonotoneNondecreasing(std::span<const double> values);

// Seconds for every grid point with the given N_b, in sweep order of N_IS.
std::vector<double> TimesForBlocks(const BenchResult& result, int n_b);
// Seconds for every grid point with the given N_IS, in sweep order of N_b.
std::vector<double> TimesForSize(const BenchResult& result, int n_is);

// Header "n_is,n_b,seconds,images_per_sec", one row per grid point.
void WriteBenchCsv(const BenchResult& result, std::ostream& out);
void WriteBenchSummary(const BenchResult& result, std::ostream& out);

// First "model name" line of /proc/cpuinfo, or "unknown".
std::string CpuDescription();

}  // namespace blockmix

#endif  // BLOCKMIX_BENCH_H_
