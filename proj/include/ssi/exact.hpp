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

#ifndef SSI_EXACT_HPP
#define SSI_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

#include "ssi/game.hpp"

namespace ssi {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact power index, one rational per canonical player. Entries lie in
/// [0, 1], sum to exactly 1, and have denominators dividing n!.
struct ExactIndex {
  std::vector<Rational> values;
};

/// Largest n accepted by the enumeration routines unless overridden.
inline constexpr int kDefaultEnumerationCap = 10;

/// |Pi_i| for each player: how many of the n! permutations pivot at i.
/// Throws TooLargeForEnumeration when n exceeds `max_players`.
std::vector<std::uint64_t> pivot_counts_by_enumeration(
    const WeightedMajorityGame& game, int max_players = kDefaultEnumerationCap);

/// Ground truth by definition: iterate all n! permutations and count pivots.
ExactIndex exact_by_enumeration(const WeightedMajorityGame& game,
                                int max_players = kDefaultEnumerationCap);

/// Number of permutations per originator value: counts[l-1] = |{pi : org(pi) = l}|.
std::vector<std::uint64_t> originator_counts_by_enumeration(
    const WeightedMajorityGame& game, int max_players = kDefaultEnumerationCap);

/// Applies the originator prefix update deterministically to all n!
/// permutations and averages in exact arithmetic. Agrees with
/// exact_by_enumeration on every game; exercised as the strongest originator
/// cross-check.
ExactIndex exact_by_originator_enumeration(
    const WeightedMajorityGame& game, int max_players = kDefaultEnumerationCap);

struct DpLimits {
  /// Cap on the (n+1) x (total weight + 1) coalition-count table.
  std::size_t max_table_entries = std::size_t{1} << 25;
};

/// Coalition-counting dynamic program over (size, weight) pairs; exact
/// big-integer arithmetic throughout. O(n^2 * total_weight) time. Throws
/// ResourceLimitExceeded when the table would exceed `limits`.
ExactIndex exact_by_dp(const WeightedMajorityGame& game,
                       const DpLimits& limits = {});

/// Rounds each rational to the nearest double.
std::vector<double> to_doubles(const ExactIndex& index);

}  // namespace ssi

#endif  // SSI_EXACT_HPP
