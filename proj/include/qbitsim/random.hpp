// Copyright 2026 The qbitsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <limits>

namespace qbitsim {

/// SplitMix64 output function (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Counter-based generator. Draw k (k = 1, 2, ...) is
///
///   mix64(seed + k * 0x9E3779B97F4A7C15)
///
/// with wrap-around arithmetic, so the sequence depends only on the seed and
/// is identical on every platform. uniform() keeps the top 53 bits of a draw
/// and scales by 2^-53.
class RandomSource {
 public:
  using result_type = std::uint64_t;

  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  explicit constexpr RandomSource(std::uint64_t seed) noexcept : seed_(seed) {}

  /// Source for shot `shot` of a run seeded with `master`:
  /// seed = mix64(master ^ mix64(shot + kGolden)).
  static constexpr RandomSource for_shot(std::uint64_t master, std::uint64_t shot) noexcept {
    return RandomSource(mix64(master ^ mix64(shot + kGolden)));
  }

  constexpr std::uint64_t next_u64() noexcept { return mix64(seed_ + (++counter_) * kGolden); }

  /// Uniform double in [0, 1).
  constexpr double uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  constexpr std::uint64_t seed() const noexcept { return seed_; }
  constexpr std::uint64_t counter() const noexcept { return counter_; }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }
  constexpr result_type operator()() noexcept { return next_u64(); }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace qbitsim
