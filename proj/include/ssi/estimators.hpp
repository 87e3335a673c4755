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

#ifndef SSI_ESTIMATORS_HPP
#define SSI_ESTIMATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ssi/game.hpp"
#include "ssi/rng.hpp"

namespace ssi {

enum class Algorithm { A1, A2 };

std::string to_string(Algorithm algorithm);

struct EstimatorConfig {
  /// Number of random permutations M.
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  /// Independent sampling streams; merged in index order, so the result is a
  /// pure function of (samples, seed, batches) regardless of scheduling.
  std::uint32_t batches = 1;
};

/// A Monte Carlo power-index estimate in canonical player order.
///
/// Every sample deposits total mass exactly 1, so the entries sum to 1 up to
/// float accumulation. A2 estimates are additionally non-increasing, with
/// bitwise-equal entries for equal-weight players.
struct Estimate {
  std::vector<double> values;
  Algorithm algorithm;
  std::uint64_t samples_used;
};

/// Uniform random permutation of 1..n via Fisher-Yates with rejection-based
/// index draws: all n! orderings are exactly equally likely under an ideal
/// generator, and a fixed seed reproduces the same output on every platform.
Permutation random_permutation(int n, Rng& rng);

/// Pivot-frequency estimator: each sample adds 1 to its pivot's counter.
Estimate estimate_a1(const WeightedMajorityGame& game,
                     const EstimatorConfig& config);

/// Originator-prefix estimator: a sample with originator L adds 1/L to each
/// of the top-L players. Samples are tallied as an originator histogram, one
/// increment per sample, and expanded by a single suffix pass at the end.
Estimate estimate_a2(const WeightedMajorityGame& game,
                     const EstimatorConfig& config);

}  // namespace ssi

#endif  // SSI_ESTIMATORS_HPP
