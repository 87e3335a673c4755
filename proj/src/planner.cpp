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

#include "ssi/planner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ssi/errors.hpp"

namespace ssi {
namespace {

// exp(ln 1.129), the constant absorbing the i >= 2 terms of the uniform A2
// union bound into the leading one.
constexpr double kUniformSeriesFactor = 1.129;

std::uint64_t ceil_to_samples(double raw) {
  if (!std::isfinite(raw) || raw >= 1.8e19)
    throw InvalidTolerance("required sample count overflows 64 bits");
  const double c = std::ceil(raw);
  return c < 1.0 ? 1 : static_cast<std::uint64_t>(c);
}

int require_players(const PlanContext& context) {
  if (context.players < 1)
    throw std::invalid_argument("this bound needs the player count n");
  return context.players;
}

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::A1PerPlayer: return "a1-per-player";
    case BoundKind::A1Uniform: return "a1-uniform";
    case BoundKind::A1TotalVariation: return "a1-tv";
    case BoundKind::A2PerPlayer: return "a2-per-player";
    case BoundKind::A2Uniform: return "a2-uniform";
    case BoundKind::A2TotalVariation: return "a2-tv";
  }
  throw std::invalid_argument("unknown bound kind");
}

SamplePlan plan(double epsilon, double delta, BoundKind kind,
                const PlanContext& context) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw InvalidTolerance("epsilon must lie in (0, 1)");
  if (!(delta > 0.0) || !(delta < 1.0))
    throw InvalidTolerance("delta must lie in (0, 1)");

  const double ln2 = std::log(2.0);
  const double ln_inv_delta = std::log(1.0 / delta);
  const double denom = 2.0 * epsilon * epsilon;

  SamplePlan result;
  result.epsilon = epsilon;
  result.delta = delta;
  result.kind = kind;

  switch (kind) {
    case BoundKind::A1PerPlayer:
      result.raw = (ln2 + ln_inv_delta) / denom;
      result.formula = "Hoeffding tail, single player";
      break;
    case BoundKind::A1Uniform: {
      const int n = require_players(context);
      result.raw = (ln2 + ln_inv_delta + std::log(double(n))) / denom;
      result.formula = "Hoeffding tail, union over n players";
      break;
    }
    case BoundKind::A1TotalVariation: {
      const int n = require_players(context);
      result.raw = (n * ln2 + ln_inv_delta) / denom;
      result.formula = "Bretagnolle-Huber-Carol tail, n categories";
      break;
    }
    case BoundKind::A2PerPlayer: {
      if (context.player < 1)
        throw PlayerIndexRequired(
            "the per-player originator bound needs the player's rank");
      const double i = static_cast<double>(context.player);
      result.raw = (ln2 + ln_inv_delta) / (denom * i * i);
      result.formula = "Hoeffding tail, sample range 1/i for rank i";
      break;
    }
    case BoundKind::A2Uniform:
      // Independent of n: the rank-i tails shrink like exp(-c i^2), so the
      // whole union costs only the constant factor 1.129 on delta.
      result.raw = (ln2 + ln_inv_delta + std::log(kUniformSeriesFactor)) / denom;
      result.formula = "Hoeffding tail series, n-independent (factor 1.129)";
      break;
    case BoundKind::A2TotalVariation: {
      const int categories = context.distinct_index_values > 0
                                 ? context.distinct_index_values
                                 : context.distinct_weights;
      if (categories < 1)
        throw std::invalid_argument(
            "the originator TV bound needs the distinct weight count");
      result.raw = (categories * ln2 + ln_inv_delta) / denom;
      result.formula =
          context.distinct_index_values > 0
              ? "Bretagnolle-Huber-Carol tail, distinct-index categories"
              : "Bretagnolle-Huber-Carol tail, distinct-weight categories";
      break;
    }
  }

  result.samples = ceil_to_samples(result.raw);
  return result;
}

double hoeffding_tail(std::uint64_t samples, double epsilon,
                      double range_width) {
  if (samples == 0) throw std::invalid_argument("samples must be at least 1");
  if (epsilon < 0.0) throw std::invalid_argument("epsilon must be >= 0");
  if (!(range_width > 0.0))
    throw std::invalid_argument("range width must be positive");
  const double scaled = epsilon / range_width;
  const double bound =
      2.0 * std::exp(-2.0 * static_cast<double>(samples) * scaled * scaled);
  return std::min(1.0, bound);
}

double bhc_tail(int categories, std::uint64_t samples, double epsilon) {
  if (categories < 1)
    throw std::invalid_argument("categories must be at least 1");
  if (samples == 0) throw std::invalid_argument("samples must be at least 1");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  // Evaluated in log space; 2^categories alone would overflow for large n.
  const double log_bound = categories * std::log(2.0) -
                           2.0 * static_cast<double>(samples) * epsilon * epsilon;
  return std::min(1.0, std::exp(log_bound));
}

double a2_uniform_exact_failure(int players, std::uint64_t samples,
                                double epsilon) {
  if (players < 1) throw std::invalid_argument("players must be at least 1");
  if (samples == 0) throw std::invalid_argument("samples must be at least 1");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  const double c = 2.0 * static_cast<double>(samples) * epsilon * epsilon;
  double sum = 0.0;
  for (int i = 1; i <= players; ++i) {
    const double term = std::exp(-c * double(i) * double(i));
    sum += term;
    if (term == 0.0) break;
  }
  return 2.0 * sum;
}

}  // namespace ssi
