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

#include "ssi/estimators.hpp"

#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace ssi {
namespace {

void fill_random_permutation(std::vector<int>& order, Rng& rng) {
  std::iota(order.begin(), order.end(), 1);
  for (std::size_t i = order.size() - 1; i > 0; --i)
    std::swap(order[i], order[uniform_below(rng, i + 1)]);
}

void check_config(const EstimatorConfig& config) {
  if (config.samples == 0)
    throw std::invalid_argument("samples must be at least 1");
  if (config.batches == 0)
    throw std::invalid_argument("batches must be at least 1");
  if (config.batches > config.samples)
    throw std::invalid_argument("batches must not exceed samples");
}

// Runs `body(batch_index, samples_in_batch, rng)` once per batch, possibly
// concurrently. Each batch owns a seed derived from (seed, batch index); the
// caller merges per-batch results in index order afterwards.
template <typename Body>
void for_each_batch(const EstimatorConfig& config, const Body& body) {
  const std::uint64_t per = config.samples / config.batches;
  const std::uint64_t extra = config.samples % config.batches;
  auto run = [&](std::uint32_t b) {
    Rng rng(derive_stream(config.seed, b));
    body(b, per + (b < extra ? 1 : 0), rng);
  };

  if (config.batches == 1) {
    run(0);
    return;
  }
  const unsigned workers = std::min<unsigned>(
      config.batches, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::uint32_t b = 0; b < config.batches; ++b) run(b);
    return;
  }
  std::atomic<std::uint32_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::uint32_t b = next.fetch_add(1); b < config.batches;
           b = next.fetch_add(1))
        run(b);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

std::string to_string(Algorithm algorithm) {
  return algorithm == Algorithm::A1 ? "a1" : "a2";
}

Permutation random_permutation(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  Permutation order(n);
  fill_random_permutation(order, rng);
  return order;
}

Estimate estimate_a1(const WeightedMajorityGame& game,
                     const EstimatorConfig& config) {
  check_config(config);
  const int n = game.player_count();

  std::vector<std::vector<std::uint64_t>> counts(
      config.batches, std::vector<std::uint64_t>(n, 0));
  for_each_batch(config, [&](std::uint32_t b, std::uint64_t m, Rng& rng) {
    std::vector<int> order(n);
    auto& mine = counts[b];
    for (std::uint64_t s = 0; s < m; ++s) {
      fill_random_permutation(order, rng);
      ++mine[game.pivot(order) - 1];
    }
  });

  std::vector<std::uint64_t> merged(n, 0);
  for (const auto& part : counts)
    for (int i = 0; i < n; ++i) merged[i] += part[i];

  Estimate est{std::vector<double>(n), Algorithm::A1, config.samples};
  const double m = static_cast<double>(config.samples);
  for (int i = 0; i < n; ++i)
    est.values[i] = static_cast<double>(merged[i]) / m;
  return est;
}

Estimate estimate_a2(const WeightedMajorityGame& game,
                     const EstimatorConfig& config) {
  check_config(config);
  const int n = game.player_count();

  std::vector<std::vector<std::uint64_t>> histograms(
      config.batches, std::vector<std::uint64_t>(n, 0));
  for_each_batch(config, [&](std::uint32_t b, std::uint64_t m, Rng& rng) {
    std::vector<int> order(n);
    std::vector<int> scratch(n + 1);
    auto& mine = histograms[b];
    for (std::uint64_t s = 0; s < m; ++s) {
      fill_random_permutation(order, rng);
      const auto res = game.originator(std::span<const int>(order),
                                       std::span<int>(scratch));
      ++mine[res.player - 1];
    }
  });

  std::vector<std::uint64_t> merged(n, 0);
  for (const auto& part : histograms)
    for (int i = 0; i < n; ++i) merged[i] += part[i];

  // Expand the histogram: player i receives sum_{l >= i} h[l]/l. Ranks with
  // tied weights never host an originator, so their histogram entries are
  // zero and equal-weight players end up with bitwise-identical suffix sums.
  Estimate est{std::vector<double>(n), Algorithm::A2, config.samples};
  const double m = static_cast<double>(config.samples);
  double suffix = 0.0;
  for (int i = n; i >= 1; --i) {
    suffix += static_cast<double>(merged[i - 1]) / static_cast<double>(i);
    est.values[i - 1] = suffix / m;
  }
  return est;
}

}  // namespace ssi
