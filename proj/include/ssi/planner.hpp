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

#ifndef SSI_PLANNER_HPP
#define SSI_PLANNER_HPP

#include <cstdint>
#include <string>

namespace ssi {

/// Which accuracy guarantee the sample count must certify.
///
/// PerPlayer: one player's estimate within epsilon.
/// Uniform:   every player's estimate within epsilon simultaneously.
/// TotalVariation: half the L1 deviation of the whole vector within epsilon.
enum class BoundKind {
  A1PerPlayer,
  A1Uniform,
  A1TotalVariation,
  A2PerPlayer,
  A2Uniform,
  A2TotalVariation,
};

std::string to_string(BoundKind kind);

/// Game facts a bound may need; fill in only what the chosen kind uses.
struct PlanContext {
  /// Number of players n (A1Uniform, A1TotalVariation).
  int players = 0;
  /// Number of distinct weight values n'' (A2TotalVariation).
  int distinct_weights = 0;
  /// Canonical rank i of the player of interest (A2PerPlayer).
  int player = 0;
  /// Optional expert override for A2TotalVariation: the number of distinct
  /// index values, when known. Tighter than distinct_weights but there is no
  /// efficient way to compute it, so it is accepted as input only.
  int distinct_index_values = 0;
};

struct SamplePlan {
  double epsilon = 0.0;
  double delta = 0.0;
  BoundKind kind = BoundKind::A1PerPlayer;
  /// ceil(raw), at least 1.
  std::uint64_t samples = 0;
  /// Formula value before the ceiling.
  double raw = 0.0;
  /// Which tail bound produced the count.
  std::string formula;
};

/// Required sample count for the chosen guarantee. epsilon and delta must lie
/// in (0, 1); throws InvalidTolerance otherwise, PlayerIndexRequired when
/// A2PerPlayer lacks its rank, and std::invalid_argument when a needed
/// context field is missing.
SamplePlan plan(double epsilon, double delta, BoundKind kind,
                const PlanContext& context = {});

/// Two-sided Hoeffding tail 2*exp(-2*M*eps^2 / width^2), clipped to [0, 1].
/// width is the range of one sample's contribution: 1 for pivot counting,
/// 1/i for the rank-i originator-prefix estimate.
double hoeffding_tail(std::uint64_t samples, double epsilon,
                      double range_width = 1.0);

/// Bretagnolle-Huber-Carol tail min(1, 2^categories * exp(-2*M*eps^2)) on the
/// event that the summed absolute multinomial deviation reaches 2*M*eps.
double bhc_tail(int categories, std::uint64_t samples, double epsilon);

/// Exact union-bound failure probability for the uniform A2 guarantee:
/// 2 * sum_{i=1}^{n} exp(-2*M*eps^2*i^2). Whenever the leading term is at
/// most 1/2 the total is bounded by 1.129 times it, which is what makes the
/// n-independent uniform plan work.
double a2_uniform_exact_failure(int players, std::uint64_t samples,
                                double epsilon);

}  // namespace ssi

#endif  // SSI_PLANNER_HPP
