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

#ifndef CLD_AUDITS_HPP_
#define CLD_AUDITS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "cld/corruption.hpp"
#include "cld/engine.hpp"

namespace cld {

// Outcome of checking an inequality lhs <= rhs (+ slack) on one or more
// rounds. `margin` is the smallest rhs - lhs seen.
struct AuditResult {
  bool applicable = true;
  std::size_t checked = 0;
  std::size_t violations = 0;
  double margin = 0.0;
  std::string first_failure;

  bool ok() const { return violations == 0; }
  void record(double lhs, double rhs, double slack, const std::string& where);
};

// Regret of x-hat against u~ vs.
//   log m / eta_{T+1} + sum_t eta_t |u~_t - u~_{t-1}|_inf^2
//     - sum_t |x_t - x_{t+1}|_1^2 / (4 eta_t) + 2 |u~_T|_inf.
// Only meaningful for kEntropyOftrl traces.
AuditResult entropy_rvu_audit(const PlayerTrace& trace, double slack = 1e-9);

// Per expert a of a swap learner, with u~_{a,t} = x-hat_t(a) u~_t:
//   m ln T / eta_{T+1} + 4 sum_t eta_t |u~_{a,t} - u~_{a,t-1}|^2_{*,y_t}
//     - sum_t |y_{t+1} - y_t|^2_{y_t} / (16 eta_t) + 6 L.
// Not applicable unless |y_{t+1} - y_t|_{y_t} <= 1/2 for every t and the
// learner's stability flag held throughout.
AuditResult logbarrier_rvu_audit(const PlayerTrace& trace, std::size_t horizon,
                                 double slack = 1e-9);

// Rates never exceed their cap and never increase. For swap learners also
// 1/eta_t - 1/eta_{t-1} <= sqrt(8) (x_{t-1}(a) + x_{t-2}(a)) / sqrt(m ln T).
AuditResult learning_rate_audit(const PlayerTrace& trace,
                                std::size_t player_count, std::size_t horizon,
                                double slack = 1e-12);

// On rounds with sum_a mu_a <= 1/2:
//   |x_t - x_{t-1}|_1 <= 8 sum_a mu_a  and
//   |x_t - x_{t-1}|_1^2 <= 64 m sum_a |y_{a,t} - y_{a,t-1}|^2_{y_{a,t-1}}.
AuditResult markov_stability_audit(const PlayerTrace& trace,
                                   double slack = 1e-12);

// sum_a |y_{a,t+1} - y_{a,t}|_{y_{a,t}} / sqrt(eta_{a,t+1}) <= 1/2 and
// sum_a mu_a <= 1/2 on every round including the look-ahead.
AuditResult honest_stability_audit(const PlayerTrace& trace);

// Largest stationarity residual over the run.
double worst_stationarity_residual(const PlayerTrace& trace);

struct RelationCheck {
  std::string name;
  double difference = 0.0;
  double bound = 0.0;
  bool ok = true;
};

// The four external and four swap regret relations between played/suggested
// strategies and true/observed utilities, using the spent budgets.
std::vector<RelationCheck> regret_relations(const PlayerTrace& trace,
                                            const PlayerLedger& ledger,
                                            double slack = 1e-9);

}  // namespace cld

#endif  // CLD_AUDITS_HPP_
