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

#ifndef CLD_SWAP_MINIMIZER_HPP_
#define CLD_SWAP_MINIMIZER_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "cld/oftrl_logbarrier.hpp"
#include "cld/simplex.hpp"

namespace cld {

// Square row-stochastic matrix. Row a is expert a's output.
class TransitionMatrix {
 public:
  // Throws kDimensionMismatch unless rows.size() == rows[a].size() for all a.
  static TransitionMatrix from_rows(std::vector<SimplexVector> rows);

  std::size_t size() const noexcept { return rows_.size(); }
  const SimplexVector& row(std::size_t a) const { return rows_[a]; }
  const std::vector<SimplexVector>& rows() const noexcept { return rows_; }

  // Returns Q^T x.
  std::vector<double> transpose_apply(std::span<const double> x) const;

 private:
  explicit TransitionMatrix(std::vector<SimplexVector> rows)
      : rows_(std::move(rows)) {}

  std::vector<SimplexVector> rows_;
};

inline constexpr double kStationaryTolerance = 1e-12;
inline constexpr long kStationaryMaxIterations = 1000000;

// Lazy power iteration x <- (x + Q^T x) / 2 from the uniform vector, stopped
// once |Q^T x - x|_1 <= tol. Throws kNoConvergence after 10^6 iterations.
SimplexVector stationary_distribution(const TransitionMatrix& q,
                                      double tol = kStationaryTolerance);

double stationarity_residual(const TransitionMatrix& q,
                             std::span<const double> x);

struct SwapLearnerState {
  std::vector<LogBarrierExpertState> experts;
  SimplexVector current_suggestion = SimplexVector::uniform(1);
  std::vector<SimplexVector> previous_outputs;  // y_a^{t-1}; empty at t = 1
  bool stability_flag = true;

  static SwapLearnerState fresh(std::size_t dimension, std::size_t player_count,
                                std::size_t horizon);

  std::size_t dimension() const noexcept { return experts.size(); }
};

// Per-round stability bookkeeping. All "move" quantities compare the outputs
// of this round (t) with the previous round (t - 1) and are zero at t = 1.
struct SwapRoundDetail {
  std::vector<SimplexVector> expert_outputs;
  std::vector<double> expert_rates;
  std::vector<double> mu;          // max_b |1 - y_a^t(b) / y_a^{t-1}(b)|
  double mu_sum = 0.0;
  double local_move_sq = 0.0;      // sum_a |y_a^t - y_a^{t-1}|^2_{y_a^{t-1}}
  double scaled_local_move = 0.0;  // sum_a |y_a^t - y_a^{t-1}|_{y_a^{t-1}} / sqrt(eta_a^t)
  double residual = 0.0;           // |Q^T xhat - xhat|_1
  bool stable = true;              // mu_sum <= 1/2
};

struct SwapRoundResult {
  SimplexVector suggestion;
  SwapLearnerState state;
  SwapRoundDetail detail;
};

// Steps every expert, assembles Q and returns its stationary distribution.
SwapRoundResult swap_round(SwapLearnerState state);

// Expert a observes suggestion(a) * utility.
SwapLearnerState swap_feedback(SwapLearnerState state,
                               const SimplexVector& suggestion,
                               std::span<const double> corrupted_utility);

}  // namespace cld

#endif  // CLD_SWAP_MINIMIZER_HPP_
