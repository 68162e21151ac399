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

#ifndef BLOCKMIX_RNG_H_
#define BLOCKMIX_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace blockmix {

// 64-bit FNV-1a. Stable across platforms and releases.
std::uint64_t Fnv1a64(std::string_view bytes);

// SplitMix64 finaliser.
std::uint64_t Mix64(std::uint64_t x);

// Seed of the private stream used for one (image, round) mixing task.
std::uint64_t DeriveStreamSeed(std::uint64_t master_seed,
                               std::string_view source_id,
                               std::uint32_t round);

// Deterministic random stream. std::mt19937_64 has a fully specified output
// sequence; the distributions below are written out here because the
// standard library ones are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double UnitDouble() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // True with probability p. Always consumes exactly one draw.
  bool Bernoulli(double p) { return UnitDouble() < p; }

  // Uniform integer in [0, n), unbiased (rejection on the low remainder).
  std::uint64_t UniformIndex(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace blockmix

#endif  // BLOCKMIX_RNG_H_
