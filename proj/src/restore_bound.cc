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

#include "blockmix/restore_bound.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <ostream>
#include <string>

#include "blockmix/error.h"

namespace blockmix {
namespace {

std::uint64_t Factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t Power(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<std::vector<int>> AllPermutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

double Log10Factorial(std::int64_t n) {
  double sum = 0.0;
  for (std::int64_t k = 2; k <= n; ++k) sum += std::log10(static_cast<double>(k));
  return sum;
}

double RestoreLog10ProbCategory(std::int64_t block_count,
                                std::int64_t image_count) {
  if (block_count < 1 || image_count < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "block and image counts must be >= 1");
  }
  return -static_cast<double>(image_count) * Log10Factorial(block_count);
}

RestoreBound RestoreLog10ProbTotal(const CategoryCensus& census) {
  if (census.categories.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "census has no categories");
  }
  RestoreBound bound;
  for (const LabelCount& c : census.categories) {
    const double v = RestoreLog10ProbCategory(census.block_count, c.count);
    bound.log10_prob_per_category.push_back(v);
    bound.log10_prob_total += v;
  }
  return bound;
}

double Rational::log10() const {
  return std::log10(static_cast<double>(num)) -
         std::log10(static_cast<double>(den));
}

Rational MakeRational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

TokenGrid TokenizeBlocks(std::span<const LabeledImage> images,
                         const PartitionSpec& spec) {
  std::map<std::vector<std::uint8_t>, BlockToken> classes;
  TokenGrid grid;
  for (const LabeledImage& image : images) {
    std::vector<BlockToken> row;
    for (int r = 0; r < spec.rows; ++r) {
      for (int c = 0; c < spec.cols; ++c) {
        auto [it, inserted] = classes.emplace(
            ExtractBlock(image, spec, {r, c}).pixels, classes.size());
        row.push_back(it->second);
      }
    }
    grid.push_back(std::move(row));
  }
  return grid;
}

ReassemblyCount EnumerateReassemblies(const TokenGrid& mixed,
                                      const TokenGrid& truth) {
  const int images = static_cast<int>(truth.size());
  if (images < 1 || mixed.size() != truth.size()) {
    throw Error(ErrorCode::kShapeMismatch,
                "mixed and truth must hold the same, non-zero image count");
  }
  const int blocks = static_cast<int>(truth.front().size());
  if (images > kMaxEnumerationImages || blocks > kMaxEnumerationBlocks) {
    throw Error(ErrorCode::kInstanceTooLarge,
                std::to_string(blocks) + " blocks x " +
                    std::to_string(images) + " images exceeds the " +
                    std::to_string(kMaxEnumerationBlocks) + "x" +
                    std::to_string(kMaxEnumerationImages) + " limit");
  }
  for (int i = 0; i < images; ++i) {
    if (static_cast<int>(truth[i].size()) != blocks ||
        static_cast<int>(mixed[i].size()) != blocks || blocks < 1) {
      throw Error(ErrorCode::kShapeMismatch, "ragged block grid");
    }
  }

  const auto perms = AllPermutations(images);
  const std::size_t per_group = perms.size();
  // Odometer over one permutation index per position group.
  std::vector<std::size_t> choice(blocks, 0);
  ReassemblyCount count;
  for (;;) {
    ++count.total;
    bool equal = true;
    for (int g = 0; g < blocks && equal; ++g) {
      const auto& perm = perms[choice[g]];
      for (int i = 0; i < images; ++i) {
        if (mixed[perm[i]][g] != truth[i][g]) {
          equal = false;
          break;
        }
      }
    }
    if (equal) ++count.successes;

    int g = 0;
    while (g < blocks && ++choice[g] == per_group) choice[g++] = 0;
    if (g == blocks) break;
  }
  count.success_prob = MakeRational(count.successes, count.total);
  return count;
}

std::vector<ComparisonRow> FormulaOracleTable(int max_blocks, int max_images) {
  std::vector<ComparisonRow> rows;
  for (int b = 1; b <= max_blocks; ++b) {
    for (int n = 1; n <= max_images; ++n) {
      TokenGrid truth(n, std::vector<BlockToken>(b));
      BlockToken next = 0;
      for (auto& image : truth) {
        for (auto& token : image) token = next++;
      }
      ComparisonRow row;
      row.block_count = b;
      row.image_count = n;
      row.oracle = EnumerateReassemblies(truth, truth).success_prob;
      row.formula = MakeRational(1, Power(Factorial(b), n));
      rows.push_back(row);
    }
  }
  return rows;
}

void WriteComparisonTable(std::span<const ComparisonRow> rows,
                          std::ostream& out) {
  out << "n_b\tn_c\toracle_prob\toracle_log10\tformula_prob\tformula_log10"
         "\tagree\n";
  char buf[256];
  for (const ComparisonRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%d\t%d\t%llu/%llu\t%.6f\t%llu/%llu\t%.6f\t%s\n",
                  r.block_count, r.image_count,
                  static_cast<unsigned long long>(r.oracle.num),
                  static_cast<unsigned long long>(r.oracle.den),
                  r.oracle.log10(),
                  static_cast<unsigned long long>(r.formula.num),
                  static_cast<unsigned long long>(r.formula.den),
                  r.formula.log10(), r.oracle == r.formula ? "yes" : "no");
    out << buf;
  }
}

}  // namespace blockmix
