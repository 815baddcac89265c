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

#include "cld/swap_minimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cld/error.hpp"

namespace cld {

TransitionMatrix TransitionMatrix::from_rows(std::vector<SimplexVector> rows) {
  if (rows.empty()) fail(ErrorCode::kInvalidArgument, "empty transition matrix");
  for (const auto& r : rows) {
    require_same_size(r.size(), rows.size(), "transition matrix row");
  }
  return TransitionMatrix(std::move(rows));
}

std::vector<double> TransitionMatrix::transpose_apply(
    std::span<const double> x) const {
  require_same_size(x.size(), size(), "transpose_apply");
  std::vector<double> out(size(), 0.0);
  for (std::size_t a = 0; a < size(); ++a) {
    const double w = x[a];
    if (w == 0.0) continue;
    const auto& r = rows_[a];
    for (std::size_t b = 0; b < size(); ++b) out[b] += w * r[b];
  }
  return out;
}

double stationarity_residual(const TransitionMatrix& q,
                             std::span<const double> x) {
  return lp_distance(q.transpose_apply(x), x, Norm::kL1);
}

SimplexVector stationary_distribution(const TransitionMatrix& q, double tol) {
  const std::size_t m = q.size();
  std::vector<double> x(m, 1.0 / static_cast<double>(m));
  for (long it = 0; it < kStationaryMaxIterations; ++it) {
    std::vector<double> qx = q.transpose_apply(x);
    double residual = 0.0;
    for (std::size_t b = 0; b < m; ++b) residual += std::abs(qx[b] - x[b]);
    if (residual <= tol) return validate_simplex(x);
    double total = 0.0;
    for (std::size_t b = 0; b < m; ++b) {
      x[b] = 0.5 * (x[b] + qx[b]);
      total += x[b];
    }
    for (double& v : x) v /= total;
  }
  fail(ErrorCode::kNoConvergence,
       "lazy power iteration did not reach residual " + std::to_string(tol));
}

SwapLearnerState SwapLearnerState::fresh(std::size_t dimension,
                                         std::size_t player_count,
                                         std::size_t horizon) {
  SwapLearnerState s;
  s.experts.reserve(dimension);
  for (std::size_t a = 0; a < dimension; ++a) {
    s.experts.push_back(
        LogBarrierExpertState::fresh(dimension, player_count, horizon));
  }
  s.current_suggestion = SimplexVector::uniform(dimension);
  return s;
}

SwapRoundResult swap_round(SwapLearnerState state) {
  const std::size_t m = state.dimension();
  SwapRoundDetail detail;
  detail.expert_outputs.reserve(m);
  detail.expert_rates.reserve(m);
  for (const auto& e : state.experts) {
    detail.expert_rates.push_back(expert_lr(e));
    detail.expert_outputs.push_back(expert_step(e));
  }
  detail.mu.assign(m, 0.0);
  if (!state.previous_outputs.empty()) {
    for (std::size_t a = 0; a < m; ++a) {
      const auto& now = detail.expert_outputs[a];
      const auto& before = state.previous_outputs[a];
      double mu = 0.0;
      std::vector<double> diff(m);
      for (std::size_t b = 0; b < m; ++b) {
        mu = std::max(mu, std::abs(1.0 - now[b] / before[b]));
        diff[b] = now[b] - before[b];
      }
      const double move = logbarrier_local_norm(diff, before.entries());
      detail.mu[a] = mu;
      detail.mu_sum += mu;
      detail.local_move_sq += move * move;
      detail.scaled_local_move += move / std::sqrt(detail.expert_rates[a]);
    }
  }
  detail.stable = detail.mu_sum <= 0.5;
  if (!detail.stable) state.stability_flag = false;

  const auto q = TransitionMatrix::from_rows(detail.expert_outputs);
  SimplexVector suggestion = stationary_distribution(q);
  detail.residual = stationarity_residual(q, suggestion.entries());

  state.current_suggestion = suggestion;
  state.previous_outputs = detail.expert_outputs;
  return SwapRoundResult{std::move(suggestion), std::move(state),
                         std::move(detail)};
}

SwapLearnerState swap_feedback(SwapLearnerState state,
                               const SimplexVector& suggestion,
                               std::span<const double> corrupted_utility) {
  const std::size_t m = state.dimension();
  require_same_size(suggestion.size(), m, "swap_feedback suggestion");
  require_same_size(corrupted_utility.size(), m, "swap_feedback utility");
  std::vector<double> scaled(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t k = 0; k < m; ++k) {
      scaled[k] = suggestion[a] * corrupted_utility[k];
    }
    state.experts[a] = expert_observe(std::move(state.experts[a]), scaled);
  }
  return state;
}

}  // namespace cld
