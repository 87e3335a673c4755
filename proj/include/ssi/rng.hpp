// Copyright 2026 The ssindex Authors
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

#ifndef SSI_RNG_HPP
#define SSI_RNG_HPP

#include <cstdint>
#include <random>

namespace ssi {

/// The generator used throughout: std::mt19937_64. Its output sequence is
/// fully specified by the C++ standard, so a fixed seed reproduces the same
/// stream on every platform.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer. Bijective 64-bit mix with good avalanche; used to
/// derive independent stream seeds from (seed, index) pairs.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed for the `index`-th child stream of `seed`. Distinct indices give
/// decorrelated streams; the derivation is pure arithmetic, so batch layouts
/// are reproducible everywhere.
constexpr std::uint64_t derive_stream(std::uint64_t seed,
                                      std::uint64_t index) noexcept {
  return splitmix64(seed ^ splitmix64(index));
}

/// Uniform draw from {0, ..., bound-1} by rejection. Never applies a plain
/// modulus to the raw output, so every value is exactly equally likely.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // 2^64 mod bound; draws below this threshold would bias the modulus.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace ssi

#endif  // SSI_RNG_HPP
