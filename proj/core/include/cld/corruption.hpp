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

#ifndef CLD_CORRUPTION_HPP_
#define CLD_CORRUPTION_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "cld/simplex.hpp"

namespace cld {

inline constexpr double kObservedUtilityClamp = 2.0;

struct PlayerLedger {
  double strategy_budget = 0.0;  // C-hat: cumulative l1 deviation of play
  double utility_budget = 0.0;   // C-tilde: cumulative l_inf deviation of feedback
  double strategy_spent = 0.0;
  double utility_spent = 0.0;

  double strategy_remaining() const;
  double utility_remaining() const;

  // The two composite levels in use: 2 C-hat + 2 C-tilde for general-sum
  // play and C-hat + 2 C-tilde for the zero-sum analysis. Computed from the
  // spent amounts, which never exceed the budgets.
  double composite_general() const {
    return 2.0 * strategy_spent + 2.0 * utility_spent;
  }
  double composite_zero_sum() const {
    return strategy_spent + 2.0 * utility_spent;
  }
};

struct CorruptionLedger {
  std::vector<PlayerLedger> players;
};

struct AdversaryMove {
  std::vector<double> strategy_delta;  // empty means no deviation
  std::vector<double> utility_delta;   // empty means no deviation
};

struct CorruptionOutcome {
  SimplexVector played;
  UtilityVector observed;
};

// played = suggested + alpha * delta with alpha = min(1, remaining / |delta|_1).
// Throws kInvalidAdversaryMove if suggested + delta is not in the simplex.
SimplexVector apply_strategy_corruption(PlayerLedger& ledger,
                                        const SimplexVector& suggested,
                                        std::span<const double> delta);

// observed = clamp(true + alpha * delta, -2, 2) with
// alpha = min(1, remaining / |delta|_inf).
UtilityVector apply_utility_corruption(PlayerLedger& ledger,
                                       std::span<const double> true_utility,
                                       std::span<const double> delta);

CorruptionOutcome apply_corruption(PlayerLedger& ledger,
                                   const SimplexVector& suggested,
                                   std::span<const double> true_utility,
                                   const AdversaryMove& move);

}  // namespace cld

#endif  // CLD_CORRUPTION_HPP_
