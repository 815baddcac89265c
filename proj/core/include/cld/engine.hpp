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

#ifndef CLD_ENGINE_HPP_
#define CLD_ENGINE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "cld/adversaries.hpp"
#include "cld/corruption.hpp"
#include "cld/game.hpp"
#include "cld/simplex.hpp"
#include "cld/swap_minimizer.hpp"

namespace cld {

enum class Algorithm { kEntropyOftrl, kHedge, kConstantOftrl, kSwapLogBarrier };

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);  // kConfigError if unknown

inline constexpr double kDefaultConstantOftrlRate = 0.1;

struct PlayerSetup {
  Algorithm algorithm = Algorithm::kEntropyOftrl;
  std::optional<double> rate;  // fixed-rate learners only
  AdversarySpec adversary;
};

// sqrt(ln m / T) for Hedge, kDefaultConstantOftrlRate for constant OFTRL.
double default_fixed_rate(Algorithm algorithm, std::size_t dimension,
                          std::size_t horizon);

using GameModel = std::variant<ZeroSumGame, GeneralSumGame>;

// Everything is stored in the utility (maximization) convention. For the
// column player of a zero-sum game the true utility is -A^T x.
struct RoundTrace {
  SimplexVector suggested;
  SimplexVector played;
  UtilityVector true_utility;
  UtilityVector observed_utility;
  double learning_rate = 0.0;    // min over experts for swap learners
  double reward_true = 0.0;      // <x, u>
  double reward_observed = 0.0;  // <x, u~>
  std::optional<SwapRoundDetail> swap;
};

struct PlayerTrace {
  Algorithm algorithm = Algorithm::kEntropyOftrl;
  std::vector<RoundTrace> rounds;
  // What the learner would do at round T + 1; the RVU audits need it.
  SimplexVector next_suggestion = SimplexVector::uniform(1);
  double next_rate = 0.0;
  std::optional<SwapRoundDetail> next_swap;
  bool stability_flag = true;

  std::size_t dimension() const { return next_suggestion.size(); }
};

struct RunResult {
  std::vector<PlayerTrace> players;
  CorruptionLedger ledger;
  std::size_t horizon = 0;
};

// One corrupted run. Each round: suggestions, strategy corruption, true
// expected utilities from the played profile, utility corruption, then
// every learner observes its own corrupted utility.
RunResult run_game(const GameModel& game, const std::vector<PlayerSetup>& setup,
                   std::size_t horizon, std::uint64_t seed);

RunResult run_zero_sum(const ZeroSumGame& game, const PlayerSetup& x,
                       const PlayerSetup& y, std::size_t horizon,
                       std::uint64_t seed);

RunResult run_general_sum(const GeneralSumGame& game,
                          const std::vector<PlayerSetup>& setup,
                          std::size_t horizon, std::uint64_t seed);

std::size_t player_count(const GameModel& game);
std::size_t action_count(const GameModel& game, std::size_t player);

}  // namespace cld

#endif  // CLD_ENGINE_HPP_
