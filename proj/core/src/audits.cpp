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

#include "cld/audits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cld/error.hpp"
#include "cld/metrics.hpp"
#include "cld/oftrl_entropy.hpp"
#include "cld/oftrl_logbarrier.hpp"

namespace cld {

void AuditResult::record(double lhs, double rhs, double slack,
                         const std::string& where) {
  const double gap = rhs - lhs;
  margin = checked == 0 ? gap : std::min(margin, gap);
  ++checked;
  if (!(lhs <= rhs + slack)) {
    if (violations == 0) {
      first_failure = where + ": " + std::to_string(lhs) + " > " +
                      std::to_string(rhs);
    }
    ++violations;
  }
}

AuditResult entropy_rvu_audit(const PlayerTrace& trace, double slack) {
  AuditResult out;
  if (trace.algorithm != Algorithm::kEntropyOftrl || trace.rounds.empty()) {
    out.applicable = false;
    return out;
  }
  const std::size_t T = trace.rounds.size();
  const std::size_t m = trace.dimension();
  const double regret = external_regret(trace, PlaySource::kSuggested,
                                        UtilitySource::kObserved);
  double rhs = std::log(static_cast<double>(m)) / trace.next_rate;
  std::vector<double> prev(m, 0.0);
  for (std::size_t t = 0; t < T; ++t) {
    const auto& r = trace.rounds[t];
    const double err = lp_distance(r.observed_utility, prev, Norm::kInf);
    rhs += r.learning_rate * err * err;
    const auto& next = t + 1 < T ? trace.rounds[t + 1].suggested
                                 : trace.next_suggestion;
    const double move = lp_distance(r.suggested.entries(), next.entries(), Norm::kL1);
    rhs -= move * move / (4.0 * r.learning_rate);
    prev = r.observed_utility;
  }
  rhs += 2.0 * lp_norm(prev, Norm::kInf);
  out.record(regret, rhs, slack, "entropy RVU");
  return out;
}

AuditResult logbarrier_rvu_audit(const PlayerTrace& trace, std::size_t horizon,
                                 double slack) {
  AuditResult out;
  const std::size_t T = trace.rounds.size();
  if (trace.algorithm != Algorithm::kSwapLogBarrier || T == 0 ||
      !trace.next_swap) {
    out.applicable = false;
    return out;
  }
  const std::size_t m = trace.dimension();
  const auto detail = [&](std::size_t t) -> const SwapRoundDetail& {
    return t < T ? *trace.rounds[t].swap : *trace.next_swap;
  };
  // Precondition: every expert moves at most 1/2 in its own local norm.
  for (std::size_t t = 0; t < T; ++t) {
    if (!detail(t).stable) out.applicable = false;
    for (std::size_t a = 0; a < m; ++a) {
      const auto& y = detail(t).expert_outputs[a];
      const auto& yn = detail(t + 1).expert_outputs[a];
      std::vector<double> diff(m);
      for (std::size_t k = 0; k < m; ++k) diff[k] = yn[k] - y[k];
      if (logbarrier_local_norm(diff, y.entries()) > 0.5) out.applicable = false;
    }
  }
  if (!out.applicable) return out;

  const double log_t = std::log(static_cast<double>(horizon));
  for (std::size_t a = 0; a < m; ++a) {
    std::vector<double> cumulative(m, 0.0);
    std::vector<double> prev(m, 0.0);
    std::vector<double> feed(m);
    double earned = 0.0;
    double lipschitz = 0.0;
    double rhs = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
      const auto& r = trace.rounds[t];
      const auto& y = detail(t).expert_outputs[a];
      const auto& yn = detail(t + 1).expert_outputs[a];
      const double eta = detail(t).expert_rates[a];
      std::vector<double> err(m), move(m);
      for (std::size_t k = 0; k < m; ++k) {
        feed[k] = r.suggested[a] * r.observed_utility[k];
        cumulative[k] += feed[k];
        err[k] = feed[k] - prev[k];
        move[k] = yn[k] - y[k];
      }
      earned += dot(y.entries(), feed);
      lipschitz = std::max(lipschitz, lp_norm(feed, Norm::kInf));
      const double dual = logbarrier_dual_norm(err, y.entries());
      const double local = logbarrier_local_norm(move, y.entries());
      rhs += 4.0 * eta * dual * dual - local * local / (16.0 * eta);
      prev = feed;
    }
    rhs += static_cast<double>(m) * log_t / detail(T).expert_rates[a];
    rhs += 6.0 * lipschitz;
    const double regret =
        *std::max_element(cumulative.begin(), cumulative.end()) - earned;
    out.record(regret, rhs, slack, "expert " + std::to_string(a));
  }
  return out;
}

AuditResult learning_rate_audit(const PlayerTrace& trace,
                                std::size_t player_count, std::size_t horizon,
                                double slack) {
  AuditResult out;
  const std::size_t T = trace.rounds.size();
  const std::size_t m = trace.dimension();
  if (trace.algorithm == Algorithm::kEntropyOftrl) {
    double before = kEntropyRateCap;
    for (std::size_t t = 0; t <= T; ++t) {
      const double eta = t < T ? trace.rounds[t].learning_rate : trace.next_rate;
      const std::string where = "round " + std::to_string(t + 1);
      out.record(eta, kEntropyRateCap, slack, where + " cap");
      out.record(eta, before, slack, where + " monotone");
      before = eta;
    }
    return out;
  }
  if (trace.algorithm != Algorithm::kSwapLogBarrier) {
    out.applicable = false;
    return out;
  }
  const double cap = expert_lr_cap(m, player_count);
  const double scale =
      std::sqrt(8.0) /
      std::sqrt(static_cast<double>(m) * std::log(static_cast<double>(horizon)));
  const std::vector<double> uniform(m, 1.0 / static_cast<double>(m));
  for (std::size_t t = 0; t <= T; ++t) {
    const auto& d = t < T ? *trace.rounds[t].swap : *trace.next_swap;
    const std::string where = "round " + std::to_string(t + 1);
    for (std::size_t a = 0; a < m; ++a) {
      const double eta = d.expert_rates[a];
      out.record(eta, cap, slack, where + " cap");
      if (t == 0) continue;
      const double before = trace.rounds[t - 1].swap->expert_rates[a];
      out.record(eta, before, slack, where + " monotone");
      // x-hat at rounds t-1 and t-2 (1-based), with x-hat_0 uniform.
      const double x1 = trace.rounds[t - 1].suggested[a];
      const double x2 = t >= 2 ? trace.rounds[t - 2].suggested[a] : uniform[a];
      out.record(1.0 / eta - 1.0 / before, scale * (x1 + x2), slack,
                 where + " increment");
    }
  }
  return out;
}

AuditResult markov_stability_audit(const PlayerTrace& trace, double slack) {
  AuditResult out;
  if (trace.algorithm != Algorithm::kSwapLogBarrier) {
    out.applicable = false;
    return out;
  }
  const double m = static_cast<double>(trace.dimension());
  for (std::size_t t = 1; t < trace.rounds.size(); ++t) {
    const auto& d = *trace.rounds[t].swap;
    if (!d.stable) continue;
    const double move = lp_distance(trace.rounds[t].suggested.entries(),
                                    trace.rounds[t - 1].suggested.entries(),
                                    Norm::kL1);
    const std::string where = "round " + std::to_string(t + 1);
    out.record(move, 8.0 * d.mu_sum, slack, where + " mu");
    out.record(move * move, 64.0 * m * d.local_move_sq, slack,
               where + " local norm");
  }
  return out;
}

AuditResult honest_stability_audit(const PlayerTrace& trace) {
  AuditResult out;
  if (trace.algorithm != Algorithm::kSwapLogBarrier) {
    out.applicable = false;
    return out;
  }
  for (std::size_t t = 0; t <= trace.rounds.size(); ++t) {
    const auto& d =
        t < trace.rounds.size() ? *trace.rounds[t].swap : *trace.next_swap;
    const std::string where = "round " + std::to_string(t + 1);
    out.record(d.mu_sum, 0.5, 0.0, where + " mu sum");
    out.record(d.scaled_local_move, 0.5, 0.0, where + " local move");
  }
  return out;
}

double worst_stationarity_residual(const PlayerTrace& trace) {
  double worst = 0.0;
  for (const auto& r : trace.rounds) {
    if (r.swap) worst = std::max(worst, r.swap->residual);
  }
  return worst;
}

std::vector<RelationCheck> regret_relations(const PlayerTrace& trace,
                                            const PlayerLedger& ledger,
                                            double slack) {
  const PlayerRegretReport r = player_report(trace);
  const double c_hat = ledger.strategy_spent;
  const double c_tilde = ledger.utility_spent;
  std::vector<RelationCheck> out;
  const auto add = [&](const char* name, double a, double b, double bound) {
    const double diff = std::abs(a - b);
    out.push_back({name, diff, bound, diff <= bound + slack});
  };
  add("external x/xhat on u", r.external.played_true, r.external.suggested_true,
      c_hat);
  add("external x/xhat on u~", r.external.played_observed,
      r.external.suggested_observed, c_hat);
  add("external u/u~ on x", r.external.played_true, r.external.played_observed,
      2.0 * c_tilde);
  add("external u/u~ on xhat", r.external.suggested_true,
      r.external.suggested_observed, 2.0 * c_tilde);
  add("swap x/xhat on u", r.swap.played_true, r.swap.suggested_true,
      2.0 * c_hat);
  add("swap x/xhat on u~", r.swap.played_observed, r.swap.suggested_observed,
      2.0 * c_hat);
  add("swap u/u~ on x", r.swap.played_true, r.swap.played_observed,
      2.0 * c_tilde);
  add("swap u/u~ on xhat", r.swap.suggested_true, r.swap.suggested_observed,
      2.0 * c_tilde);
  return out;
}

}  // namespace cld
