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

#include "ssi/game.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace ssi {

WeightedMajorityGame::WeightedMajorityGame(Weight quota,
                                           const std::vector<Weight>& weights)
    : quota_(quota) {
  if (weights.empty()) throw EmptyGame("a game needs at least one player");
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] == 0)
      throw NonPositiveWeight("player " + std::to_string(k + 1) +
                              " has weight 0; weights must be positive");
  }

  const std::size_t n = weights.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return weights[a] > weights[b];
  });

  weights_.resize(n);
  labels_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    weights_[k] = weights[order[k]];
    labels_[k] = order[k] + 1;
  }

  total_ = 0;
  for (Weight w : weights_) {
    if (total_ > std::numeric_limits<Weight>::max() - w)
      throw WeightSumOverflow("total weight does not fit in 64 bits");
    total_ += w;
  }

  if (quota_ == 0 || quota_ > total_)
    throw QuotaOutOfRange("quota " + std::to_string(quota_) +
                          " outside (0, " + std::to_string(total_) + "]");
}

bool WeightedMajorityGame::is_winning(std::span<const int> coalition) const {
  Weight sum = 0;
  for (int p : coalition) {
    if (p < 1 || p > player_count())
      throw std::out_of_range("player " + std::to_string(p) +
                              " not in 1.." + std::to_string(player_count()));
    sum += weights_[p - 1];
  }
  return sum >= quota_;
}

int WeightedMajorityGame::pivot(const Permutation& order) const {
  Weight acc = 0;
  for (int p : order) {
    acc += weights_[p - 1];
    if (acc >= quota_) return p;
  }
  throw std::invalid_argument("order is not a permutation of all players");
}

OriginatorResult WeightedMajorityGame::originator(
    const Permutation& order) const {
  std::vector<int> scratch(order.size() + 1);
  return originator(std::span<const int>(order), std::span<int>(scratch));
}

OriginatorResult WeightedMajorityGame::originator(
    std::span<const int> order, std::span<int> position_scratch) const {
  const int n = player_count();
  for (int pos = 0; pos < n; ++pos) position_scratch[order[pos]] = pos;

  // Pivot scan: a = pivot position (0-based), prefix = weight before it.
  Weight prefix = 0;
  int a = -1;
  int chain = 0;
  for (int pos = 0; pos < n; ++pos) {
    const Weight w = weights_[order[pos] - 1];
    if (prefix + w >= quota_) {
      a = pos;
      chain = order[pos];
      break;
    }
    prefix += w;
  }
  if (a < 0)
    throw std::invalid_argument("order is not a permutation of all players");

  // Climb: with pivot player `chain` at position a, the permutation with
  // players `chain` and `chain+1` swapped pivots at `chain+1` iff the prefix
  // in front of position a still loses and wins once the new occupant joins.
  // Position a and the invariant prefix < q <= prefix + w_chain carry over;
  // players above chain+1 have not been moved, so their original positions
  // remain valid.
  while (chain < n) {
    const Weight w_here = weights_[chain - 1];
    const Weight w_next = weights_[chain];
    if (position_scratch[chain + 1] > a) {
      if (prefix + w_next < quota_) break;
    } else {
      if (prefix + w_here - w_next >= quota_) break;
      prefix += w_here - w_next;
    }
    ++chain;
  }
  return OriginatorResult{chain, a + 1};
}

int WeightedMajorityGame::distinct_weight_count() const noexcept {
  int count = 1;
  for (std::size_t k = 1; k < weights_.size(); ++k)
    if (weights_[k] != weights_[k - 1]) ++count;
  return count;
}

bool is_valid_permutation(const WeightedMajorityGame& game,
                          const Permutation& order) {
  const int n = game.player_count();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<bool> seen(n + 1, false);
  for (int p : order) {
    if (p < 1 || p > n || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

}  // namespace ssi
