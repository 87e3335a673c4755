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

#ifndef SSI_GAME_HPP
#define SSI_GAME_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ssi/errors.hpp"

namespace ssi {

using Weight = std::uint64_t;

/// An ordering of the players 1..n; each player appears exactly once.
using Permutation = std::vector<int>;

/// Result of resolving a permutation's originator.
struct OriginatorResult {
  /// Originator player L; always pivot <= L <= n.
  int player;
  /// 1-based position of the pivot within the permutation. The position is
  /// invariant along the swap chain, so it is also the position at which the
  /// originator permutation pivots.
  int pivot_position;
};

/// A weighted majority voting game [q; w_1, ..., w_n].
///
/// Weights are held internally in non-increasing order (players are ranked by
/// weight); `original_label` maps each canonical player back to the position
/// the caller supplied it in. All player arguments and results are 1-based
/// canonical ranks unless stated otherwise.
class WeightedMajorityGame {
 public:
  /// Validates and canonicalizes. The sort is stable, so equal-weight players
  /// keep their original relative order.
  ///
  /// Throws EmptyGame, NonPositiveWeight, WeightSumOverflow, or
  /// QuotaOutOfRange (quota must satisfy 0 < q <= sum of weights).
  WeightedMajorityGame(Weight quota, const std::vector<Weight>& weights);

  int player_count() const noexcept { return static_cast<int>(weights_.size()); }
  Weight quota() const noexcept { return quota_; }
  Weight total_weight() const noexcept { return total_; }

  /// Weights in canonical non-increasing order.
  const std::vector<Weight>& weights() const noexcept { return weights_; }

  /// Weight of canonical player `player` (1-based).
  Weight weight_of(int player) const { return weights_.at(player - 1); }

  /// Original 1-based label of canonical player `player`.
  int original_label(int player) const { return labels_.at(player - 1); }

  /// labels()[k] is the original label of canonical player k+1.
  const std::vector<int>& labels() const noexcept { return labels_; }

  /// True iff the coalition's total weight reaches the quota. The empty
  /// coalition always loses. Players are canonical ranks; an out-of-range
  /// player throws std::out_of_range.
  bool is_winning(std::span<const int> coalition) const;

  /// The pivot of `order`: the player whose arrival turns the growing prefix
  /// from losing to winning. Defined for every valid permutation because the
  /// grand coalition wins.
  int pivot(const Permutation& order) const;

  /// Resolves the originator of `order` by walking the swap chain upward from
  /// the pivot. O(n): the chain test needs only the pivot position and the
  /// prefix weight in front of it, both maintained incrementally.
  OriginatorResult originator(const Permutation& order) const;

  /// Same, with caller-provided scratch of size at least player_count()+1
  /// (used as a player -> position table). Avoids allocation in hot loops.
  OriginatorResult originator(std::span<const int> order,
                              std::span<int> position_scratch) const;

  /// Number of distinct weight values.
  int distinct_weight_count() const noexcept;

  /// Reorders a canonical per-player vector into the caller's original
  /// player order.
  template <typename T>
  std::vector<T> to_original_order(const std::vector<T>& canonical) const {
    std::vector<T> out(canonical.size());
    for (std::size_t k = 0; k < canonical.size(); ++k)
      out[labels_[k] - 1] = canonical[k];
    return out;
  }

 private:
  Weight quota_ = 0;
  Weight total_ = 0;
  std::vector<Weight> weights_;
  std::vector<int> labels_;
};

/// True iff `order` is a permutation of 1..n for this game.
bool is_valid_permutation(const WeightedMajorityGame& game,
                          const Permutation& order);

}  // namespace ssi

#endif  // SSI_GAME_HPP
