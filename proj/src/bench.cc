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

#include "blockmix/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "blockmix/error.h"
#include "blockmix/mixer.h"
#include "blockmix/synthetic.h"

namespace blockmix {
namespace {

// Reference throughput quoted for the original implementation on a laptop
// CPU at N_IS = 5000; printed for context only.
constexpr struct {
  int n_b;
  double images_per_sec;
} kPublishedThroughput[] = {{128, 13.0}, {256, 6.0}};

std::string FormatDouble(double v, const char* fmt = "%.6f") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

template <typename T>
void CheckSweep(const std::vector<T>& values, const char* what) {
  if (values.empty()) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " is empty");
  }
  for (const T v : values) {
    if (v < 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + " values must be >= 1");
    }
  }
}

}  // namespace

DatasetGenerator UniformNoiseGenerator() {
  return [](int count, int labels, ImageSize size, std::uint64_t seed) {
    return SyntheticDataset(count, labels, size, seed,
                            SyntheticKind::kUniformNoise);
  };
}

BenchResult RunBench(const BenchOptions& options,
                     const DatasetGenerator& generator) {
  CheckSweep(options.sizes, "sizes");
  CheckSweep(options.blocks, "blocks");
  if (options.repetitions < 1 || options.workers < 1 || options.labels < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "repetitions, workers and labels must be >= 1");
  }
  std::vector<MixConfig> configs;
  for (const int n_b : options.blocks) {
    MixConfig config;
    config.partition =
        PartitionForBlockCount(options.canonical, n_b, options.grid);
    config.rounds = options.rounds;
    config.donors_per_image = options.donors_per_image;
    config.replace_prob = options.replace_prob;
    config.master_seed = options.seed;
    config.donor_shortage_policy = DonorShortagePolicy::kSampleWithReplacement;
    config.singleton_label_policy = SingletonLabelPolicy::kPassthroughWithWarning;
    ValidateMixConfig(config);
    configs.push_back(config);
  }

  BenchResult result;
  result.cpu = CpuDescription();
  result.workers = options.workers;
  result.canonical = options.canonical;
  MixOptions mix_options;
  mix_options.workers = options.workers;

  for (const int n_is : options.sizes) {
    const Dataset dataset =
        generator(n_is, options.labels, options.canonical, options.seed);
    std::vector<BenchPoint> points(configs.size());
    for (std::size_t b = 0; b < configs.size(); ++b) {
      points[b].n_is = n_is;
      points[b].n_b = options.blocks[b];
    }
    // Repetitions are interleaved over the block sweep, so a transient
    // slowdown lands on several points once each instead of on every
    // sample of one point.
    for (int rep = 0; rep <= options.repetitions; ++rep) {
      for (std::size_t b = 0; b < configs.size(); ++b) {
        const auto start = std::chrono::steady_clock::now();
        MixRun run = MixDataset(dataset, configs[b], mix_options);
        const auto stop = std::chrono::steady_clock::now();
        if (rep == 0) continue;  // warm-up
        points[b].samples.push_back(
            std::chrono::duration<double>(stop - start).count());
      }
    }
    for (BenchPoint& point : points) {
      point.seconds = Median(point.samples);
      point.images_per_sec = n_is / point.seconds;
      result.points.push_back(std::move(point));
    }
  }
  return result;
}

double Median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid]
                                : 0.5 * (values[mid - 1] + values[mid]);
}

LinearFit FitLine(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "line fit needs >= 2 paired points");
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "line fit needs distinct x");
  }
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

bool IsMonotoneNondecreasing(std::span<const double> values) {
  return std::is_sorted(values.begin(), values.end());
}

std::vector<double> TimesForBlocks(const BenchResult& result, int n_b) {
  std::vector<double> times;
  for (const BenchPoint& p : result.points) {
    if (p.n_b == n_b) times.push_back(p.seconds);
  }
  return times;
}

std::vector<double> TimesForSize(const BenchResult& result, int n_is) {
  std::vector<double> times;
  for (const BenchPoint& p : result.points) {
    if (p.n_is == n_is) times.push_back(p.seconds);
  }
  return times;
}

void WriteBenchCsv(const BenchResult& result, std::ostream& out) {
  out << "n_is,n_b,seconds,images_per_sec\n";
  for (const BenchPoint& p : result.points) {
    out << p.n_is << "," << p.n_b << "," << FormatDouble(p.seconds, "%.9f")
        << "," << FormatDouble(p.images_per_sec, "%.3f") << "\n";
  }
}

void WriteBenchSummary(const BenchResult& result, std::ostream& out) {
  out << "cpu: " << result.cpu << "\n"
      << "workers: " << result.workers << "\n"
      << "canonical size: " << FormatImageSize(result.canonical) << "\n";
  std::vector<int> sizes, blocks;
  for (const BenchPoint& p : result.points) {
    if (std::find(sizes.begin(), sizes.end(), p.n_is) == sizes.end()) {
      sizes.push_back(p.n_is);
    }
    if (std::find(blocks.begin(), blocks.end(), p.n_b) == blocks.end()) {
      blocks.push_back(p.n_b);
    }
    out << "  n_is=" << p.n_is << " n_b=" << p.n_b
        << " median=" << FormatDouble(p.seconds) << "s ("
        << FormatDouble(p.images_per_sec, "%.1f") << " img/s)\n";
  }
  if (sizes.size() >= 2) {
    std::vector<double> xs(sizes.begin(), sizes.end());
    for (const int n_b : blocks) {
      const auto ys = TimesForBlocks(result, n_b);
      const LinearFit fit = FitLine(xs, ys);
      out << "time vs n_is at n_b=" << n_b
          << ": R^2=" << FormatDouble(fit.r_squared, "%.4f")
          << " slope=" << FormatDouble(fit.slope * 1e3, "%.4f")
          << " ms/image\n";
    }
  }
  if (blocks.size() >= 2) {
    for (const int n_is : sizes) {
      out << "time monotone nondecreasing in n_b at n_is=" << n_is << ": "
          << (IsMonotoneNondecreasing(TimesForSize(result, n_is)) ? "yes"
                                                                  : "no")
          << "\n";
    }
  }
  out << "reference (original implementation, laptop CPU, n_is=5000):";
  for (const auto& ref : kPublishedThroughput) {
    out << " n_b=" << ref.n_b << " ~" << ref.images_per_sec << " img/s;";
  }
  out << " context only\n";
}

std::string CpuDescription() {
  std::ifstream in("/proc/cpuinfo");
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("model name", 0) == 0) {
      const auto colon = line.find(':');
      if (colon != std::string::npos) {
        auto value = line.substr(colon + 1);
        value.erase(0, value.find_first_not_of(' '));
        return value;
      }
    }
  }
  return "unknown";
}

}  // namespace blockmix
