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

#include "ssi/exact.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ssi {
namespace {

void check_enumerable(const WeightedMajorityGame& game, int max_players) {
  if (game.player_count() > max_players)
    throw TooLargeForEnumeration(
        "n = " + std::to_string(game.player_count()) +
        " exceeds the enumeration cap " + std::to_string(max_players));
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

std::vector<std::uint64_t> pivot_counts_by_enumeration(
    const WeightedMajorityGame& game, int max_players) {
  check_enumerable(game, max_players);
  const int n = game.player_count();
  std::vector<std::uint64_t> counts(n, 0);
  Permutation order(n);
  std::iota(order.begin(), order.end(), 1);
  do {
    ++counts[game.pivot(order) - 1];
  } while (std::next_permutation(order.begin(), order.end()));
  return counts;
}

ExactIndex exact_by_enumeration(const WeightedMajorityGame& game,
                                int max_players) {
  const auto counts = pivot_counts_by_enumeration(game, max_players);
  const BigInt denom = factorial(game.player_count());
  ExactIndex index;
  index.values.reserve(counts.size());
  for (std::uint64_t c : counts) index.values.emplace_back(BigInt(c), denom);
  return index;
}

std::vector<std::uint64_t> originator_counts_by_enumeration(
    const WeightedMajorityGame& game, int max_players) {
  check_enumerable(game, max_players);
  const int n = game.player_count();
  std::vector<std::uint64_t> counts(n, 0);
  std::vector<int> scratch(n + 1);
  Permutation order(n);
  std::iota(order.begin(), order.end(), 1);
  do {
    const auto res = game.originator(std::span<const int>(order),
                                     std::span<int>(scratch));
    ++counts[res.player - 1];
  } while (std::next_permutation(order.begin(), order.end()));
  return counts;
}

ExactIndex exact_by_originator_enumeration(const WeightedMajorityGame& game,
                                           int max_players) {
  const auto counts = originator_counts_by_enumeration(game, max_players);
  const int n = game.player_count();
  const BigInt denom = factorial(n);
  // Each permutation with originator l contributes 1/l to players 1..l, so
  // player i collects sum_{l >= i} counts[l] / l over all permutations.
  ExactIndex index;
  index.values.assign(n, Rational(0));
  Rational suffix = 0;
  for (int i = n; i >= 1; --i) {
    suffix += Rational(BigInt(counts[i - 1]), BigInt(i));
    index.values[i - 1] = suffix / Rational(denom);
  }
  return index;
}

ExactIndex exact_by_dp(const WeightedMajorityGame& game,
                       const DpLimits& limits) {
  const int n = game.player_count();
  const Weight total = game.total_weight();
  if (total + 1 > limits.max_table_entries / static_cast<Weight>(n + 1))
    throw ResourceLimitExceeded(
        "coalition table (" + std::to_string(n + 1) + " x " +
        std::to_string(total + 1) + ") exceeds the configured limit");

  const std::size_t width = static_cast<std::size_t>(total) + 1;
  const auto& w = game.weights();

  // table[k][s] = number of coalitions of size k and weight s, over all
  // players currently included.
  std::vector<std::vector<BigInt>> table(
      n + 1, std::vector<BigInt>(width, BigInt(0)));
  table[0][0] = 1;
  for (int i = 0; i < n; ++i) {
    const std::size_t wi = static_cast<std::size_t>(w[i]);
    for (int k = n; k >= 1; --k)
      for (std::size_t s = width - 1; s >= wi; --s)
        table[k][s] += table[k - 1][s - wi];
  }

  std::vector<BigInt> fact(n + 1);
  fact[0] = 1;
  for (int k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k;

  const std::size_t hi = static_cast<std::size_t>(game.quota()) - 1;

  ExactIndex index;
  index.values.resize(n);
  for (int i = 1; i <= n; ++i) {
    const std::size_t wi = static_cast<std::size_t>(w[i - 1]);

    // Remove player i in place: ascending k so row k-1 is already updated.
    for (int k = 1; k <= n; ++k)
      for (std::size_t s = wi; s < width; ++s)
        table[k][s] -= table[k - 1][s - wi];

    // Coalitions S (without i) that i turns winning: q - w_i <= w(S) < q.
    const std::size_t lo = game.quota() > w[i - 1]
                               ? static_cast<std::size_t>(game.quota() - w[i - 1])
                               : 0;
    BigInt numerator = 0;
    for (int k = 0; k < n; ++k) {
      BigInt swing = 0;
      for (std::size_t s = lo; s <= hi; ++s) swing += table[k][s];
      if (swing != 0) numerator += fact[k] * fact[n - 1 - k] * swing;
    }
    index.values[i - 1] = Rational(numerator, fact[n]);

    // Put player i back: descending k so row k-1 still holds the removed
    // state when row k reads it.
    for (int k = n; k >= 1; --k)
      for (std::size_t s = width - 1; s >= wi; --s)
        table[k][s] += table[k - 1][s - wi];
  }
  return index;
}

std::vector<double> to_doubles(const ExactIndex& index) {
  std::vector<double> out;
  out.reserve(index.values.size());
  for (const Rational& v : index.values) out.push_back(v.convert_to<double>());
  return out;
}

}  // namespace ssi
