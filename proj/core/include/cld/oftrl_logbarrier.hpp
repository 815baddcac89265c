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

#ifndef CLD_OFTRL_LOGBARRIER_HPP_
#define CLD_OFTRL_LOGBARRIER_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "cld/simplex.hpp"

namespace cld {

// Result of maximizing <y, w> + (1/eta) sum_k log y_k over the simplex.
// KKT gives y_k = 1 / (eta (lambda - w_k)) for the unique lambda in
// [max w + 1/eta, max w + m/eta] with sum_k y_k = 1.
struct LogBarrierSolution {
  SimplexVector point;
  double multiplier;    // lambda
  double kkt_residual;  // max_k |w_k + 1/(eta y_k) - lambda|
  int iterations;
};

inline constexpr int kLogBarrierMaxIterations = 500;
inline constexpr double kLogBarrierKktTolerance = 1e-10;

// Safeguarded Newton on the dual multiplier. Starting at the left end of the
// bracket, Newton iterates increase monotonically to the root because the
// dual residual is convex and decreasing; bisection takes over if a step
// would leave the bracket. Throws kSolverDiverged if the KKT residual is
// above 1e-10 after kLogBarrierMaxIterations iterations.
LogBarrierSolution solve_logbarrier(std::span<const double> score, double rate);

SimplexVector logbarrier_argmax(std::span<const double> score, double rate);

// One external-regret learner ("expert") of the swap reduction: OFTRL with
// the log barrier and the expert-wise rate
//
//   eta_t = min( sqrt( (m ln T / 8) / (4 + sum_{s<t} |u_s - u_{s-1}|_inf^2) ),
//                1 / (256 n sqrt(m)) )
//
// where u_0 = 0, n is the number of players and T the horizon (T >= 3).
struct LogBarrierExpertState {
  std::vector<double> cumulative_utility;
  std::vector<double> last_utility;
  double path_accumulator = 0.0;
  std::size_t player_count = 1;
  std::size_t horizon = 3;
  std::size_t round = 1;

  static LogBarrierExpertState fresh(std::size_t dimension,
                                     std::size_t player_count,
                                     std::size_t horizon);

  std::size_t dimension() const noexcept { return cumulative_utility.size(); }
};

double expert_lr_cap(std::size_t dimension, std::size_t player_count);
double expert_lr(const LogBarrierExpertState& state);

SimplexVector expert_step(const LogBarrierExpertState& state);
LogBarrierSolution expert_solve(const LogBarrierExpertState& state);

LogBarrierExpertState expert_observe(LogBarrierExpertState state,
                                     std::span<const double> scaled_utility);

}  // namespace cld

#endif  // CLD_OFTRL_LOGBARRIER_HPP_
