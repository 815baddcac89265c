// Copyright 2026 The cld Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cld/corruption.hpp"

#include <algorithm>
#include <cmath>

#include "cld/error.hpp"

namespace cld {
namespace {

bool all_zero(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double d) { return d == 0.0; });
}

}  // namespace

double PlayerLedger::strategy_remaining() const {
  return std::max(0.0, strategy_budget - strategy_spent);
}

double PlayerLedger::utility_remaining() const {
  return std::max(0.0, utility_budget - utility_spent);
}

SimplexVector apply_strategy_corruption(PlayerLedger& ledger,
                                        const SimplexVector& suggested,
                                        std::span<const double> delta) {
  if (delta.empty() || all_zero(delta)) return suggested;
  require_same_size(delta.size(), suggested.size(), "strategy delta");
  std::vector<double> target(suggested.size());
  for (std::size_t k = 0; k < target.size(); ++k) {
    target[k] = suggested[k] + delta[k];
  }
  try {
    validate_simplex(target);
  } catch (const Error&) {
    fail(ErrorCode::kInvalidAdversaryMove,
         "suggested + strategy delta leaves the simplex");
  }
  const double size = lp_norm(delta, Norm::kL1);
  const double alpha = std::min(1.0, ledger.strategy_remaining() / size);
  if (alpha <= 0.0) return suggested;
  // Convex combination of two simplex points stays in the simplex.
  for (std::size_t k = 0; k < target.size(); ++k) {
    target[k] = suggested[k] + alpha * delta[k];
  }
  SimplexVector played = validate_simplex(target);
  ledger.strategy_spent +=
      lp_distance(played.entries(), suggested.entries(), Norm::kL1);
  return played;
}

UtilityVector apply_utility_corruption(PlayerLedger& ledger,
                                       std::span<const double> true_utility,
                                       std::span<const double> delta) {
  UtilityVector observed(true_utility.begin(), true_utility.end());
  if (delta.empty() || all_zero(delta)) return observed;
  require_same_size(delta.size(), true_utility.size(), "utility delta");
  for (double d : delta) {
    if (!std::isfinite(d)) {
      fail(ErrorCode::kInvalidAdversaryMove, "non-finite utility delta");
    }
  }
  const double size = lp_norm(delta, Norm::kInf);
  const double alpha = std::min(1.0, ledger.utility_remaining() / size);
  if (alpha <= 0.0) return observed;
  for (std::size_t k = 0; k < observed.size(); ++k) {
    observed[k] = std::clamp(true_utility[k] + alpha * delta[k],
                             -kObservedUtilityClamp, kObservedUtilityClamp);
  }
  ledger.utility_spent += lp_distance(observed, true_utility, Norm::kInf);
  return observed;
}

CorruptionOutcome apply_corruption(PlayerLedger& ledger,
                                   const SimplexVector& suggested,
                                   std::span<const double> true_utility,
                                   const AdversaryMove& move) {
  SimplexVector played =
      apply_strategy_corruption(ledger, suggested, move.strategy_delta);
  UtilityVector observed =
      apply_utility_corruption(ledger, true_utility, move.utility_delta);
  return CorruptionOutcome{std::move(played), std::move(observed)};
}

}  // namespace cld
