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

#include "cld/engine.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "cld/error.hpp"
#include "cld/oftrl_entropy.hpp"

namespace cld {
namespace {

struct Suggestion {
  SimplexVector point;
  double rate;
  std::optional<SwapRoundDetail> detail;
};

class Learner {
 public:
  Learner(const PlayerSetup& setup, std::size_t dimension,
          std::size_t players, std::size_t horizon)
      : algorithm_(setup.algorithm) {
    if (algorithm_ == Algorithm::kSwapLogBarrier) {
      swap_ = SwapLearnerState::fresh(dimension, players, horizon);
    } else {
      entropy_ = EntropyOftrlState::fresh(dimension);
      if (algorithm_ != Algorithm::kEntropyOftrl) {
        rate_ = setup.rate.value_or(
            default_fixed_rate(algorithm_, dimension, horizon));
        if (!(rate_ > 0.0)) {
          fail(ErrorCode::kConfigError, "fixed learning rate must be > 0");
        }
      }
    }
  }

  Suggestion suggest() {
    switch (algorithm_) {
      case Algorithm::kEntropyOftrl:
        return {entropy_oftrl_step(entropy_), entropy_lr(entropy_), {}};
      case Algorithm::kHedge:
        return {hedge_step(entropy_.cumulative_utility, rate_), rate_, {}};
      case Algorithm::kConstantOftrl:
        return {constant_oftrl_step(entropy_, rate_), rate_, {}};
      case Algorithm::kSwapLogBarrier: {
        SwapRoundResult r = swap_round(std::move(swap_));
        swap_ = std::move(r.state);
        double lo = r.detail.expert_rates.front();
        for (double e : r.detail.expert_rates) lo = std::min(lo, e);
        return {std::move(r.suggestion), lo, std::move(r.detail)};
      }
    }
    fail(ErrorCode::kInvalidArgument, "unknown algorithm");
  }

  void observe(const SimplexVector& suggested, std::span<const double> u) {
    if (algorithm_ == Algorithm::kSwapLogBarrier) {
      swap_ = swap_feedback(std::move(swap_), suggested, u);
    } else {
      entropy_ = entropy_observe(std::move(entropy_), u);
    }
  }

 private:
  Algorithm algorithm_;
  double rate_ = 0.0;
  EntropyOftrlState entropy_;
  SwapLearnerState swap_;
};

std::vector<UtilityVector> true_utilities(const GameModel& game,
                                          const std::vector<SimplexVector>& x) {
  if (const auto* zs = std::get_if<ZeroSumGame>(&game)) {
    ZeroSumFeedback f = zero_sum_round(*zs, x[0], x[1]);
    for (double& v : f.l) v = -v;
    return {std::move(f.g), std::move(f.l)};
  }
  const auto& gs = std::get<GeneralSumGame>(game);
  std::vector<UtilityVector> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.push_back(expected_utility(gs, i, x));
  }
  return out;
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kEntropyOftrl: return "entropy_oftrl";
    case Algorithm::kHedge: return "hedge";
    case Algorithm::kConstantOftrl: return "constant_oftrl";
    case Algorithm::kSwapLogBarrier: return "swap_logbarrier";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kEntropyOftrl, Algorithm::kHedge,
                      Algorithm::kConstantOftrl, Algorithm::kSwapLogBarrier}) {
    if (to_string(a) == name) return a;
  }
  fail(ErrorCode::kConfigError, "unknown algorithm '" + std::string(name) + "'");
}

double default_fixed_rate(Algorithm algorithm, std::size_t dimension,
                          std::size_t horizon) {
  if (algorithm == Algorithm::kHedge) {
    return std::sqrt(std::log(static_cast<double>(dimension)) /
                     static_cast<double>(std::max<std::size_t>(horizon, 1)));
  }
  return kDefaultConstantOftrlRate;
}

std::size_t player_count(const GameModel& game) {
  if (std::holds_alternative<ZeroSumGame>(game)) return 2;
  return std::get<GeneralSumGame>(game).player_count();
}

std::size_t action_count(const GameModel& game, std::size_t player) {
  if (const auto* zs = std::get_if<ZeroSumGame>(&game)) {
    return player == 0 ? zs->rows() : zs->cols();
  }
  return std::get<GeneralSumGame>(game).action_count(player);
}

RunResult run_game(const GameModel& game, const std::vector<PlayerSetup>& setup,
                   std::size_t horizon, std::uint64_t seed) {
  const std::size_t n = player_count(game);
  require_same_size(setup.size(), n, "player setups");
  if (horizon < 1) fail(ErrorCode::kInvalidArgument, "horizon must be >= 1");

  std::vector<Learner> learners;
  std::vector<std::unique_ptr<Adversary>> adversaries;
  std::vector<std::vector<double>> cumulative(n);
  RunResult result;
  result.horizon = horizon;
  result.players.resize(n);
  result.ledger.players.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = action_count(game, i);
    learners.emplace_back(setup[i], m, n, horizon);
    adversaries.push_back(make_adversary(setup[i].adversary, m, horizon, i, seed));
    cumulative[i].assign(m, 0.0);
    result.players[i].algorithm = setup[i].algorithm;
    result.players[i].rounds.reserve(horizon);
    result.ledger.players[i].strategy_budget = setup[i].adversary.strategy_budget;
    result.ledger.players[i].utility_budget = setup[i].adversary.utility_budget;
  }

  std::vector<Suggestion> suggested;
  std::vector<SimplexVector> played;
  for (std::size_t t = 1; t <= horizon; ++t) {
    suggested.clear();
    played.clear();
    for (std::size_t i = 0; i < n; ++i) {
      suggested.push_back(learners[i].suggest());
      const auto delta = adversaries[i]->strategy_delta(
          StrategyContext{t, horizon, suggested[i].point, cumulative[i]});
      played.push_back(apply_strategy_corruption(
          result.ledger.players[i], suggested[i].point, delta));
    }
    std::vector<UtilityVector> truth = true_utilities(game, played);
    for (std::size_t i = 0; i < n; ++i) {
      const auto delta = adversaries[i]->utility_delta(
          UtilityContext{t, horizon, truth[i], cumulative[i], played[i]});
      UtilityVector observed =
          apply_utility_corruption(result.ledger.players[i], truth[i], delta);
      learners[i].observe(suggested[i].point, observed);
      for (std::size_t k = 0; k < truth[i].size(); ++k) {
        cumulative[i][k] += truth[i][k];
      }
      RoundTrace rt{suggested[i].point,
                    played[i],
                    std::move(truth[i]),
                    std::move(observed),
                    suggested[i].rate,
                    0.0,
                    0.0,
                    std::move(suggested[i].detail)};
      rt.reward_true = dot(rt.played.entries(), rt.true_utility);
      rt.reward_observed = dot(rt.played.entries(), rt.observed_utility);
      result.players[i].rounds.push_back(std::move(rt));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Suggestion next = learners[i].suggest();
    result.players[i].next_suggestion = std::move(next.point);
    result.players[i].next_rate = next.rate;
    result.players[i].next_swap = std::move(next.detail);
    // The look-ahead round is not part of the run; its stability check is
    // reported through next_swap only.
    bool flag = true;
    for (const auto& r : result.players[i].rounds) {
      if (r.swap && !r.swap->stable) flag = false;
    }
    result.players[i].stability_flag = flag;
  }
  return result;
}

RunResult run_zero_sum(const ZeroSumGame& game, const PlayerSetup& x,
                       const PlayerSetup& y, std::size_t horizon,
                       std::uint64_t seed) {
  return run_game(GameModel(game), {x, y}, horizon, seed);
}

RunResult run_general_sum(const GeneralSumGame& game,
                          const std::vector<PlayerSetup>& setup,
                          std::size_t horizon, std::uint64_t seed) {
  return run_game(GameModel(game), setup, horizon, seed);
}

}  // namespace cld
