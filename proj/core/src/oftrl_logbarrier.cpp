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

#include "cld/oftrl_logbarrier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cld/error.hpp"

namespace cld {

LogBarrierSolution solve_logbarrier(std::span<const double> score,
                                    double rate) {
  const std::size_t m = score.size();
  if (m == 0) fail(ErrorCode::kInvalidArgument, "empty score vector");
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    fail(ErrorCode::kInvalidArgument, "rate must be positive and finite");
  }
  double top = score[0];
  for (double w : score) {
    if (!std::isfinite(w)) fail(ErrorCode::kInvalidArgument, "non-finite score");
    top = std::max(top, w);
  }
  // Work with gaps d_k = max w - w_k >= 0 and mu = lambda - max w, so that
  // y_k = 1 / (rate (mu + d_k)) and mu lies in [1/rate, m/rate].
  std::vector<double> gap(m);
  for (std::size_t k = 0; k < m; ++k) gap[k] = top - score[k];

  const auto residual = [&](double mu, double* slope) {
    double sum = 0.0, deriv = 0.0;
    for (double d : gap) {
      const double inv = 1.0 / (rate * (mu + d));
      sum += inv;
      deriv -= inv / (mu + d);
    }
    if (slope != nullptr) *slope = deriv;
    return sum - 1.0;
  };

  double lo = 1.0 / rate;
  double hi = static_cast<double>(m) / rate;
  double mu = lo;
  int iterations = 0;
  for (; iterations < kLogBarrierMaxIterations; ++iterations) {
    double slope = 0.0;
    const double f = residual(mu, &slope);
    if (f == 0.0) break;
    if (f > 0.0) lo = mu; else hi = mu;
    double next = mu - f / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == mu) break;
    const bool tiny_step = std::abs(next - mu) <= 1e-15 * std::abs(mu);
    mu = next;
    if (tiny_step) break;
  }

  std::vector<double> y(m);
  double total = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    y[k] = 1.0 / (rate * (mu + gap[k]));
    total += y[k];
  }
  if (std::abs(total - 1.0) > 1e-12) {
    fail(ErrorCode::kSolverDiverged,
         "dual residual " + std::to_string(total - 1.0) + " after " +
             std::to_string(iterations) + " iterations");
  }
  for (double& v : y) v /= total;

  double kkt = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    kkt = std::max(kkt, std::abs(-gap[k] + 1.0 / (rate * y[k]) - mu));
  }
  if (kkt > kLogBarrierKktTolerance) {
    fail(ErrorCode::kSolverDiverged,
         "KKT residual " + std::to_string(kkt) + " above tolerance");
  }
  return LogBarrierSolution{validate_simplex(y), mu + top, kkt, iterations};
}

SimplexVector logbarrier_argmax(std::span<const double> score, double rate) {
  return solve_logbarrier(score, rate).point;
}

LogBarrierExpertState LogBarrierExpertState::fresh(std::size_t dimension,
                                                   std::size_t player_count,
                                                   std::size_t horizon) {
  if (horizon < 3) {
    fail(ErrorCode::kHorizonTooSmall,
         "log-barrier experts need T >= 3, got " + std::to_string(horizon));
  }
  if (dimension < 2 || player_count < 1) {
    fail(ErrorCode::kInvalidArgument, "need m >= 2 actions and n >= 1 players");
  }
  LogBarrierExpertState s;
  s.cumulative_utility.assign(dimension, 0.0);
  s.last_utility.assign(dimension, 0.0);
  s.player_count = player_count;
  s.horizon = horizon;
  return s;
}

double expert_lr_cap(std::size_t dimension, std::size_t player_count) {
  return 1.0 / (256.0 * static_cast<double>(player_count) *
                std::sqrt(static_cast<double>(dimension)));
}

double expert_lr(const LogBarrierExpertState& state) {
  if (state.horizon < 3) fail(ErrorCode::kHorizonTooSmall, "T < 3");
  const double m = static_cast<double>(state.dimension());
  const double adaptive =
      std::sqrt((m * std::log(static_cast<double>(state.horizon)) / 8.0) /
                (4.0 + state.path_accumulator));
  return std::min(adaptive, expert_lr_cap(state.dimension(), state.player_count));
}

LogBarrierSolution expert_solve(const LogBarrierExpertState& state) {
  std::vector<double> w(state.dimension());
  for (std::size_t k = 0; k < w.size(); ++k) {
    w[k] = state.last_utility[k] + state.cumulative_utility[k];
  }
  return solve_logbarrier(w, expert_lr(state));
}

SimplexVector expert_step(const LogBarrierExpertState& state) {
  return expert_solve(state).point;
}

LogBarrierExpertState expert_observe(LogBarrierExpertState state,
                                     std::span<const double> scaled_utility) {
  require_same_size(scaled_utility.size(), state.dimension(), "expert_observe");
  const double jump =
      lp_distance(scaled_utility, state.last_utility, Norm::kInf);
  state.path_accumulator += jump * jump;
  for (std::size_t k = 0; k < scaled_utility.size(); ++k) {
    state.cumulative_utility[k] += scaled_utility[k];
  }
  state.last_utility.assign(scaled_utility.begin(), scaled_utility.end());
  ++state.round;
  return state;
}

}  // namespace cld
