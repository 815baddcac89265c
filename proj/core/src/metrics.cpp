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

#include "cld/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cld/error.hpp"

namespace cld {
namespace {

void check_sequences(const VectorSequence& plays,
                     const VectorSequence& utilities) {
  require_same_size(plays.size(), utilities.size(), "sequence length");
  if (plays.empty()) fail(ErrorCode::kEmptySequence, "no rounds");
  const std::size_t m = plays.front().size();
  for (std::size_t t = 0; t < plays.size(); ++t) {
    require_same_size(plays[t].size(), m, "play dimension");
    require_same_size(utilities[t].size(), m, "utility dimension");
  }
}

RegretAccumulator accumulate(const VectorSequence& plays,
                             const VectorSequence& utilities) {
  check_sequences(plays, utilities);
  RegretAccumulator acc(plays.front().size());
  for (std::size_t t = 0; t < plays.size(); ++t) acc.add(plays[t], utilities[t]);
  return acc;
}

}  // namespace

RegretAccumulator::RegretAccumulator(std::size_t dimension)
    : m_(dimension), cumulative_(dimension, 0.0), gain_(dimension * dimension, 0.0) {}

void RegretAccumulator::add(std::span<const double> play,
                            std::span<const double> utility) {
  require_same_size(play.size(), m_, "play");
  require_same_size(utility.size(), m_, "utility");
  for (std::size_t k = 0; k < m_; ++k) cumulative_[k] += utility[k];
  earned_ += dot(play, utility);
  for (std::size_t a = 0; a < m_; ++a) {
    const double w = play[a];
    if (w == 0.0) continue;
    double* row = &gain_[a * m_];
    for (std::size_t b = 0; b < m_; ++b) row[b] += w * (utility[b] - utility[a]);
  }
  ++rounds_;
}

double RegretAccumulator::external() const {
  return *std::max_element(cumulative_.begin(), cumulative_.end()) - earned_;
}

double RegretAccumulator::swap() const {
  double total = 0.0;
  for (std::size_t a = 0; a < m_; ++a) {
    const double* row = &gain_[a * m_];
    // b = a contributes exactly 0, so every row term is >= 0.
    total += *std::max_element(row, row + m_);
  }
  return total;
}

double external_regret(const VectorSequence& plays,
                       const VectorSequence& utilities) {
  return accumulate(plays, utilities).external();
}

double comparator_regret(const VectorSequence& plays,
                         const VectorSequence& utilities,
                         std::span<const double> comparator) {
  check_sequences(plays, utilities);
  require_same_size(comparator.size(), plays.front().size(), "comparator");
  double s = 0.0;
  for (std::size_t t = 0; t < plays.size(); ++t) {
    s += dot(comparator, utilities[t]) - dot(plays[t], utilities[t]);
  }
  return s;
}

double swap_regret(const VectorSequence& plays,
                   const VectorSequence& utilities) {
  return accumulate(plays, utilities).swap();
}

double swap_regret_for(const VectorSequence& plays,
                       const VectorSequence& utilities, const Matrix& m) {
  check_sequences(plays, utilities);
  const std::size_t d = plays.front().size();
  require_same_size(m.rows(), d, "swap matrix rows");
  require_same_size(m.cols(), d, "swap matrix cols");
  double s = 0.0;
  for (std::size_t t = 0; t < plays.size(); ++t) {
    const std::vector<double> mu = m.apply(utilities[t]);
    for (std::size_t a = 0; a < d; ++a) {
      s += plays[t][a] * (mu[a] - utilities[t][a]);
    }
  }
  return s;
}

VectorSequence plays_of(const PlayerTrace& trace, PlaySource source) {
  VectorSequence out;
  out.reserve(trace.rounds.size());
  for (const auto& r : trace.rounds) {
    const auto& x = source == PlaySource::kPlayed ? r.played : r.suggested;
    out.emplace_back(x.begin(), x.end());
  }
  return out;
}

VectorSequence utilities_of(const PlayerTrace& trace, UtilitySource source) {
  VectorSequence out;
  out.reserve(trace.rounds.size());
  for (const auto& r : trace.rounds) {
    out.push_back(source == UtilitySource::kTrue ? r.true_utility
                                                 : r.observed_utility);
  }
  return out;
}

double external_regret(const PlayerTrace& trace, PlaySource p,
                       UtilitySource u) {
  return external_regret(plays_of(trace, p), utilities_of(trace, u));
}

double swap_regret(const PlayerTrace& trace, PlaySource p, UtilitySource u) {
  return swap_regret(plays_of(trace, p), utilities_of(trace, u));
}

double path_length(const VectorSequence& sequence, Norm q, PathAnchor anchor) {
  if (sequence.empty()) fail(ErrorCode::kEmptySequence, "empty sequence");
  const std::size_t d = sequence.front().size();
  double total = 0.0;
  std::vector<double> previous;
  std::size_t start = 0;
  switch (anchor) {
    case PathAnchor::kZero:
      previous.assign(d, 0.0);
      break;
    case PathAnchor::kUniform:
      previous.assign(d, 1.0 / static_cast<double>(d));
      break;
    case PathAnchor::kSkipFirst:
      previous = sequence.front();
      start = 1;
      break;
  }
  for (std::size_t t = start; t < sequence.size(); ++t) {
    const double jump = lp_distance(sequence[t], previous, q);
    total += jump * jump;
    previous = sequence[t];
  }
  return total;
}

PlayerRegretReport player_report(const PlayerTrace& trace) {
  const VectorSequence x = plays_of(trace, PlaySource::kPlayed);
  const VectorSequence xh = plays_of(trace, PlaySource::kSuggested);
  const VectorSequence u = utilities_of(trace, UtilitySource::kTrue);
  const VectorSequence ut = utilities_of(trace, UtilitySource::kObserved);
  PlayerRegretReport r;
  const auto fill = [&](RegretVariants& v, auto&& fn) {
    v.played_true = fn(x, u);
    v.suggested_true = fn(xh, u);
    v.played_observed = fn(x, ut);
    v.suggested_observed = fn(xh, ut);
  };
  fill(r.external, [](const auto& p, const auto& w) {
    return external_regret(p, w);
  });
  fill(r.swap, [](const auto& p, const auto& w) { return swap_regret(p, w); });
  r.path_suggested_l1 = path_length(xh, Norm::kL1, PathAnchor::kUniform);
  r.path_observed_inf = path_length(ut, Norm::kInf, PathAnchor::kZero);
  r.path_true_inf = path_length(u, Norm::kInf, PathAnchor::kZero);
  return r;
}

void require_complete(const RunResult& run) {
  if (run.horizon == 0 || run.players.empty()) {
    fail(ErrorCode::kIncompleteTrace, "empty run");
  }
  for (const auto& p : run.players) {
    if (p.rounds.size() != run.horizon) {
      fail(ErrorCode::kIncompleteTrace,
           "player trace has " + std::to_string(p.rounds.size()) +
               " rounds, expected " + std::to_string(run.horizon));
    }
  }
}

RegretReport four_variant_report(const RunResult& run, const GameModel& game) {
  require_complete(run);
  RegretReport report;
  for (const auto& p : run.players) report.players.push_back(player_report(p));
  if (const auto* zs = std::get_if<ZeroSumGame>(&game)) {
    const SimplexVector xbar = average_play(run.players[0], PlaySource::kPlayed);
    const SimplexVector ybar = average_play(run.players[1], PlaySource::kPlayed);
    report.nash_gap = nash_gap(*zs, xbar.entries(), ybar.entries());
  }
  report.ce_gap = ce_gap(run);
  return report;
}

double nash_gap(const ZeroSumGame& game, std::span<const double> xbar,
                std::span<const double> ybar) {
  const Matrix& a = game.payoff();
  require_same_size(xbar.size(), a.rows(), "xbar");
  require_same_size(ybar.size(), a.cols(), "ybar");
  const std::vector<double> ay = a.apply(ybar);
  const std::vector<double> atx = a.apply_transpose(xbar);
  const double value = dot(xbar, ay);
  const double best_x = *std::max_element(ay.begin(), ay.end());
  const double best_y = *std::min_element(atx.begin(), atx.end());
  return std::max({best_x - value, value - best_y, 0.0});
}

SimplexVector average_play(const PlayerTrace& trace, PlaySource source) {
  if (trace.rounds.empty()) fail(ErrorCode::kEmptySequence, "no rounds");
  std::vector<double> sum(trace.rounds.front().played.size(), 0.0);
  for (const auto& r : trace.rounds) {
    const auto& x = source == PlaySource::kPlayed ? r.played : r.suggested;
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += x[k];
  }
  for (double& v : sum) v /= static_cast<double>(trace.rounds.size());
  return validate_simplex(sum);
}

double ce_gap(const RunResult& run) {
  require_complete(run);
  double worst = 0.0;
  for (const auto& p : run.players) {
    worst = std::max(worst,
                     swap_regret(p, PlaySource::kPlayed, UtilitySource::kTrue));
  }
  return worst / static_cast<double>(run.horizon);
}

double ce_gap_joint(const GeneralSumGame& game, const RunResult& run) {
  require_complete(run);
  const std::size_t n = game.player_count();
  require_same_size(run.players.size(), n, "players");
  const std::size_t joint = game.joint_size();
  const double inv_t = 1.0 / static_cast<double>(run.horizon);

  // mu(a) = (1/T) sum_t prod_i x_i^t(a_i)
  std::vector<double> mu(joint, 0.0);
  std::vector<std::size_t> digit(n);
  for (std::size_t t = 0; t < run.horizon; ++t) {
    std::fill(digit.begin(), digit.end(), 0);
    for (std::size_t idx = 0; idx < joint; ++idx) {
      double p = inv_t;
      for (std::size_t i = 0; i < n; ++i) p *= run.players[i].rounds[t].played[digit[i]];
      mu[idx] += p;
      for (std::size_t i = n; i-- > 0;) {
        if (++digit[i] < game.action_count(i)) break;
        digit[i] = 0;
      }
    }
  }

  double worst = 0.0;
  std::vector<std::size_t> act(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = game.action_count(i);
    // gain[a][b] = sum over joint a with a_i = a of mu(a) (u_i(b, a_-i) - u_i(a))
    std::vector<double> gain(m * m, 0.0);
    std::fill(digit.begin(), digit.end(), 0);
    for (std::size_t idx = 0; idx < joint; ++idx) {
      const double here = game.table(i)[idx];
      act = digit;
      for (std::size_t b = 0; b < m; ++b) {
        act[i] = b;
        gain[digit[i] * m + b] += mu[idx] * (game.utility(i, act) - here);
      }
      for (std::size_t j = n; j-- > 0;) {
        if (++digit[j] < game.action_count(j)) break;
        digit[j] = 0;
      }
    }
    double total = 0.0;
    for (std::size_t a = 0; a < m; ++a) {
      total += *std::max_element(gain.begin() + a * m, gain.begin() + (a + 1) * m);
    }
    worst = std::max(worst, total);
  }
  return worst;
}

}  // namespace cld
