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

#include "cld/oftrl_entropy.hpp"

#include <algorithm>
#include <cmath>

#include "cld/error.hpp"

namespace cld {

EntropyOftrlState EntropyOftrlState::fresh(std::size_t dimension) {
  if (dimension < 2) {
    fail(ErrorCode::kInvalidArgument, "entropy OFTRL needs at least 2 actions");
  }
  EntropyOftrlState s;
  s.cumulative_utility.assign(dimension, 0.0);
  s.last_utility.assign(dimension, 0.0);
  return s;
}

double log_plus(double z) { return std::max(std::log(z), 4.0); }

double entropy_lr(const EntropyOftrlState& state) {
  const double lp = log_plus(static_cast<double>(state.dimension()));
  return std::sqrt((lp / 2.0) / (lp + state.path_accumulator));
}

SimplexVector softmax(std::span<const double> scores, double rate) {
  if (scores.empty()) fail(ErrorCode::kInvalidArgument, "softmax of nothing");
  double top = rate * scores[0];
  for (double s : scores) top = std::max(top, rate * s);
  std::vector<double> p(scores.size());
  double total = 0.0;
  for (std::size_t k = 0; k < scores.size(); ++k) {
    p[k] = std::max(std::exp(rate * scores[k] - top), 1e-300);
    total += p[k];
  }
  for (double& x : p) x /= total;
  return validate_simplex(p);
}

namespace {

std::vector<double> optimistic_scores(const EntropyOftrlState& state) {
  std::vector<double> w(state.dimension());
  for (std::size_t k = 0; k < w.size(); ++k) {
    w[k] = state.last_utility[k] + state.cumulative_utility[k];
  }
  return w;
}

}  // namespace

SimplexVector entropy_oftrl_step(const EntropyOftrlState& state) {
  return softmax(optimistic_scores(state), entropy_lr(state));
}

EntropyOftrlState entropy_observe(EntropyOftrlState state,
                                  std::span<const double> utility) {
  require_same_size(utility.size(), state.dimension(), "entropy_observe");
  const double jump = lp_distance(utility, state.last_utility, Norm::kInf);
  state.path_accumulator += jump * jump;
  for (std::size_t k = 0; k < utility.size(); ++k) {
    state.cumulative_utility[k] += utility[k];
  }
  state.last_utility.assign(utility.begin(), utility.end());
  ++state.round;
  return state;
}

SimplexVector hedge_step(std::span<const double> cumulative_utility,
                         double fixed_rate) {
  if (!(fixed_rate > 0.0)) fail(ErrorCode::kInvalidArgument, "rate must be > 0");
  return softmax(cumulative_utility, fixed_rate);
}

SimplexVector constant_oftrl_step(const EntropyOftrlState& state,
                                  double fixed_rate) {
  if (!(fixed_rate > 0.0)) fail(ErrorCode::kInvalidArgument, "rate must be > 0");
  return softmax(optimistic_scores(state), fixed_rate);
}

}  // namespace cld
