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

// Probability that an adversary holding a mixed dataset reassembles the
// originals, assuming every original block survived mixing.
//
// Closed-form bound, per category with N_C images split into N_b blocks:
//   P(category) = 1 / (N_b!)^N_C,   P(dataset) = prod over categories.
// Both are evaluated in log10 space; realistic values underflow doubles.
//
// EnumerateReassemblies is an independent brute-force count on tiny
// instances: within each position group the N_C blocks may be dealt to the
// N_C images in any order, giving (N_C!)^N_b assemblies when all blocks are
// distinct. That count agrees with the closed form only when N_b == N_C;
// FormulaOracleTable lays the two side by side.

#ifndef BLOCKMIX_RESTORE_BOUND_H_
#define BLOCKMIX_RESTORE_BOUND_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "blockmix/image.h"
#include "blockmix/manifest.h"
#include "blockmix/partition.h"

namespace blockmix {

struct CategoryCensus {
  std::vector<LabelCount> categories;
  std::int64_t block_count = 0;
};

struct RestoreBound {
  std::vector<double> log10_prob_per_category;
  double log10_prob_total = 0.0;
};

// log10(n!) as a sum of log10(k); never forms n!.
double Log10Factorial(std::int64_t n);

// -N_C * log10(N_b!). Throws Error(kInvalidArgument) for counts < 1.
double RestoreLog10ProbCategory(std::int64_t block_count,
                                std::int64_t image_count);

// Throws Error(kInvalidArgument) for an empty census or counts < 1.
RestoreBound RestoreLog10ProbTotal(const CategoryCensus& census);

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double log10() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Reduced num/den. Throws Error(kInvalidArgument) for den == 0.
Rational MakeRational(std::uint64_t num, std::uint64_t den);

// Content class of one block; equal tokens mean bit-identical blocks.
using BlockToken = std::uint64_t;
// images x positions
using TokenGrid = std::vector<std::vector<BlockToken>>;

// Assigns equal tokens to bit-identical blocks across all given images
// (row-major block order).
TokenGrid TokenizeBlocks(std::span<const LabeledImage> images,
                         const PartitionSpec& spec);

struct ReassemblyCount {
  std::uint64_t total = 0;      // assemblies enumerated
  std::uint64_t successes = 0;  // assemblies equal to `truth`, image by image
  Rational success_prob;
};

inline constexpr int kMaxEnumerationBlocks = 4;
inline constexpr int kMaxEnumerationImages = 4;

// Throws Error(kInstanceTooLarge) beyond 4 blocks or 4 images and
// Error(kShapeMismatch) for ragged input.
ReassemblyCount EnumerateReassemblies(const TokenGrid& mixed,
                                      const TokenGrid& truth);

struct ComparisonRow {
  int block_count = 0;
  int image_count = 0;
  Rational oracle;   // brute-force success probability, all-distinct blocks
  Rational formula;  // 1 / (N_b!)^N_C
};

std::vector<ComparisonRow> FormulaOracleTable(int max_blocks, int max_images);

void WriteComparisonTable(std::span<const ComparisonRow> rows,
                          std::ostream& out);

}  // namespace blockmix

#endif  // BLOCKMIX_RESTORE_BOUND_H_
