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

#ifndef CLD_ADVERSARIES_HPP_
#define CLD_ADVERSARIES_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cld/game.hpp"
#include "cld/simplex.hpp"

namespace cld {

enum class AdversaryKind {
  kNone,
  kRademacher,
  kLowerI,
  kLowerII,
  kLowerIII,
  kFrontloaded,
  kPeriodic,
  kTargeted,
};

std::string_view to_string(AdversaryKind kind);
// Throws kConfigError on an unknown name.
AdversaryKind parse_adversary_kind(std::string_view name);

struct AdversarySpec {
  AdversaryKind kind = AdversaryKind::kNone;
  double strategy_budget = 0.0;
  double utility_budget = 0.0;
  std::optional<std::uint64_t> seed;  // defaults to the run seed
};

enum class Channel { kStrategy, kUtility };

// Per-round allowance (l1 mass for strategies, l_inf mass for utilities).
// Rounds past the end of the allowance get nothing.
struct CorruptionSchedule {
  std::vector<double> allowance;

  double at(std::size_t round) const {  // round is 1-based
    return round >= 1 && round <= allowance.size() ? allowance[round - 1] : 0.0;
  }
  std::size_t active_rounds() const;
  double total() const;
};

// frontloaded / targeted: 2 (strategy) or 1 (utility) per round until the
// budget runs out, remainder in the last active round. periodic: budget / T
// every round. Budget 0 gives an empty schedule.
CorruptionSchedule generic_schedule(AdversaryKind kind, double budget,
                                    std::size_t horizon, Channel channel);

std::vector<int> rademacher_signs(std::uint64_t seed, std::size_t horizon);

// T vectors sigma_t (e_1 - e_2) in R^d.
std::vector<std::vector<double>> rademacher_sequence(std::uint64_t seed,
                                                     std::size_t horizon,
                                                     std::size_t dimension);

struct LowerBoundInstance {
  ZeroSumGame game;
  AdversarySpec x_adversary;
  AdversarySpec y_adversary;
  std::size_t active_rounds = 0;
};

// A = 0 (m x m); the x-player's feedback is sigma_t (e_1 - e_2) for the first
// floor(C/2) rounds.
LowerBoundInstance lower_bound_i(std::size_t m, double utility_budget,
                                 std::uint64_t seed);

// First m_x - 1 rows all ones, last row zero; the x-player is forced onto
// e_{m_x} for the first floor(C/2) rounds.
LowerBoundInstance lower_bound_ii(std::size_t m_x, double strategy_budget,
                                  std::size_t m_y = 2);

// A = [[1, 0, -1], [0, 1, -1]]; the y-player is forced so that
// A y = (sigma_t / 3) (1, -1) for the first floor(C/2) rounds.
LowerBoundInstance lower_bound_iii(double strategy_budget, std::uint64_t seed);

// y with A y = g for the matrix of lower_bound_iii:
// y = (g1 + y3, g2 + y3, y3), y3 = (1 - g1 - g2) / 3.
std::vector<double> lower_iii_strategy(double g1, double g2);

inline constexpr double kLowerIIIScale = 1.0 / 3.0;

struct StrategyContext {
  std::size_t round;  // 1-based
  std::size_t horizon;
  const SimplexVector& suggested;
  std::span<const double> cumulative_true_utility;  // rounds 1..t-1
};

struct UtilityContext {
  std::size_t round;
  std::size_t horizon;
  std::span<const double> true_utility;
  std::span<const double> cumulative_true_utility;  // rounds 1..t-1
  const SimplexVector& played;
};

// Requests are proposals; the corruption ledger scales them to the budget.
class Adversary {
 public:
  virtual ~Adversary() = default;

  virtual std::vector<double> strategy_delta(const StrategyContext&) {
    return {};
  }
  virtual std::vector<double> utility_delta(const UtilityContext&) {
    return {};
  }
};

std::unique_ptr<Adversary> make_adversary(const AdversarySpec& spec,
                                          std::size_t dimension,
                                          std::size_t horizon,
                                          std::size_t player,
                                          std::uint64_t run_seed);

}  // namespace cld

#endif  // CLD_ADVERSARIES_HPP_
