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

#ifndef CLD_METRICS_HPP_
#define CLD_METRICS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cld/engine.hpp"
#include "cld/game.hpp"
#include "cld/simplex.hpp"

namespace cld {

using VectorSequence = std::vector<std::vector<double>>;

// Running external and swap regret of a play/utility sequence. Swap regret
// uses the row decomposition sum_a max_b sum_t x_t(a) (u_t(b) - u_t(a)).
class RegretAccumulator {
 public:
  explicit RegretAccumulator(std::size_t dimension);

  void add(std::span<const double> play, std::span<const double> utility);

  double external() const;
  double swap() const;
  std::size_t rounds() const noexcept { return rounds_; }

 private:
  std::size_t m_;
  std::size_t rounds_ = 0;
  std::vector<double> cumulative_;  // sum_t u_t(k)
  double earned_ = 0.0;             // sum_t <x_t, u_t>
  std::vector<double> gain_;        // m x m, sum_t x_t(a) (u_t(b) - u_t(a))
};

// max_k sum_t u_t(k) - sum_t <x_t, u_t>.
double external_regret(const VectorSequence& plays,
                       const VectorSequence& utilities);
// sum_t <z - x_t, u_t> for a fixed comparator z.
double comparator_regret(const VectorSequence& plays,
                         const VectorSequence& utilities,
                         std::span<const double> comparator);
double swap_regret(const VectorSequence& plays, const VectorSequence& utilities);
// sum_t <x_t, M u_t - u_t> for a fixed row-stochastic M.
double swap_regret_for(const VectorSequence& plays,
                       const VectorSequence& utilities, const Matrix& m);

enum class PlaySource { kSuggested, kPlayed };
enum class UtilitySource { kTrue, kObserved };

VectorSequence plays_of(const PlayerTrace& trace, PlaySource source);
VectorSequence utilities_of(const PlayerTrace& trace, UtilitySource source);

double external_regret(const PlayerTrace& trace, PlaySource p, UtilitySource u);
double swap_regret(const PlayerTrace& trace, PlaySource p, UtilitySource u);

enum class PathAnchor { kZero, kUniform, kSkipFirst };

// sum of squared q-norm jumps. kZero and kUniform prepend the all-zero or
// uniform vector; kSkipFirst starts at the second element.
double path_length(const VectorSequence& sequence, Norm q, PathAnchor anchor);

struct RegretVariants {
  double played_true = 0.0;         // x, u
  double suggested_true = 0.0;      // x-hat, u
  double played_observed = 0.0;     // x, u~
  double suggested_observed = 0.0;  // x-hat, u~
};

struct PlayerRegretReport {
  RegretVariants external;
  RegretVariants swap;
  double path_suggested_l1 = 0.0;  // uniform anchor
  double path_observed_inf = 0.0;  // zero anchor
  double path_true_inf = 0.0;      // zero anchor
};

struct RegretReport {
  std::vector<PlayerRegretReport> players;
  std::optional<double> nash_gap;  // zero-sum games only
  double ce_gap = 0.0;
};

PlayerRegretReport player_report(const PlayerTrace& trace);

// Throws kIncompleteTrace unless every player has `horizon` rounds.
RegretReport four_variant_report(const RunResult& run, const GameModel& game);

// max{max_i (A ybar)_i - xbar^T A ybar, xbar^T A ybar - min_j (A^T xbar)_j}.
double nash_gap(const ZeroSumGame& game, std::span<const double> xbar,
                std::span<const double> ybar);

SimplexVector average_play(const PlayerTrace& trace, PlaySource source);

// max_i SwapReg_i(played, true) / T.
double ce_gap(const RunResult& run);

// Same quantity from the materialized time-averaged joint distribution.
// Exponential in the player count; a test oracle for small games.
double ce_gap_joint(const GeneralSumGame& game, const RunResult& run);

void require_complete(const RunResult& run);

}  // namespace cld

#endif  // CLD_METRICS_HPP_
