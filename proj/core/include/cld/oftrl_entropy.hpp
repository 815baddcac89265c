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

#ifndef CLD_OFTRL_ENTROPY_HPP_
#define CLD_OFTRL_ENTROPY_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "cld/simplex.hpp"

namespace cld {

// Optimistic FTRL with the Shannon-entropy regularizer and a learning rate
// that shrinks with the observed variation of the utilities:
//
//   eta_t = sqrt( (logp(m) / 2) / (logp(m) + sum_{s<t} |g_s - g_{s-1}|_inf^2) )
//
// with logp(m) = max(ln m, 4) and g_0 = 0. The rate therefore never exceeds
// 1/sqrt(2). Logarithms are natural throughout.
//
// States are plain values: step functions read them, observe returns the
// successor.
struct EntropyOftrlState {
  std::vector<double> cumulative_utility;
  std::vector<double> last_utility;  // the optimistic prediction
  double path_accumulator = 0.0;
  std::size_t round = 1;             // the round the next step plays

  static EntropyOftrlState fresh(std::size_t dimension);

  std::size_t dimension() const noexcept { return cumulative_utility.size(); }
};

inline constexpr double kEntropyRateCap = 0.70710678118654752440;

double log_plus(double z);

double entropy_lr(const EntropyOftrlState& state);

// Softmax of rate * scores, max-shifted and floored at 1e-300 before
// normalization so no entry is exactly zero.
SimplexVector softmax(std::span<const double> scores, double rate);

SimplexVector entropy_oftrl_step(const EntropyOftrlState& state);

EntropyOftrlState entropy_observe(EntropyOftrlState state,
                                  std::span<const double> utility);

// Baselines. Hedge has no optimism; constant OFTRL is the adaptive learner
// with the rate pinned.
SimplexVector hedge_step(std::span<const double> cumulative_utility,
                         double fixed_rate);
SimplexVector constant_oftrl_step(const EntropyOftrlState& state,
                                  double fixed_rate);

}  // namespace cld

#endif  // CLD_OFTRL_ENTROPY_HPP_
