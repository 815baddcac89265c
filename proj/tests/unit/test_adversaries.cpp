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

#include <cmath>
#include <cstdlib>
#include <vector>

#include "cld/adversaries.hpp"
#include "cld/engine.hpp"
#include "cld/error.hpp"
#include "cld/metrics.hpp"
#include "doctest.h"

namespace cld {
namespace {

TEST_CASE("adversary names round-trip") {
  for (AdversaryKind k : {AdversaryKind::kNone, AdversaryKind::kRademacher,
                          AdversaryKind::kLowerI, AdversaryKind::kLowerII,
                          AdversaryKind::kLowerIII, AdversaryKind::kFrontloaded,
                          AdversaryKind::kPeriodic, AdversaryKind::kTargeted}) {
    CHECK(parse_adversary_kind(to_string(k)) == k);
  }
  CHECK_THROWS_AS(parse_adversary_kind("sneaky"), Error);
}

TEST_CASE("rademacher sequence shape") {
  const auto seq = rademacher_sequence(11, 200, 4);
  REQUIRE(seq.size() == 200);
  for (const auto& v : seq) {
    CHECK(lp_norm(v, Norm::kInf) == 1.0);
    CHECK(v[0] == -v[1]);
    CHECK(v[2] == 0.0);
    CHECK(v[3] == 0.0);
  }
  CHECK(rademacher_signs(11, 50) == rademacher_signs(11, 50));
}

TEST_CASE("Khintchine floor by Monte Carlo") {
  double total = 0.0;
  for (std::uint64_t s = 0; s < 10000; ++s) {
    int sum = 0;
    for (int v : rademacher_signs(s, 100)) sum += v;
    total += std::abs(sum);
  }
  CHECK(total / 10000.0 >= 0.95 * std::sqrt(100.0 / 2.0));
}

TEST_CASE("generic schedules") {
  CHECK(generic_schedule(AdversaryKind::kFrontloaded, 0.0, 100, Channel::kStrategy)
            .active_rounds() == 0);
  const CorruptionSchedule f =
      generic_schedule(AdversaryKind::kFrontloaded, 10.0, 100, Channel::kStrategy);
  CHECK(f.active_rounds() == 5);
  CHECK(f.at(1) == 2.0);
  CHECK(f.at(6) == 0.0);
  CHECK(f.total() == doctest::Approx(10.0));

  const std::size_t horizon = 500;
  const CorruptionSchedule p = generic_schedule(AdversaryKind::kPeriodic, horizon * 0.02,
                                                horizon, Channel::kUtility);
  CHECK(p.active_rounds() == horizon);
  for (std::size_t t = 1; t <= horizon; ++t) CHECK(p.at(t) == doctest::Approx(0.02));
}

TEST_CASE("lower bound (ii) construction") {
  const LowerBoundInstance inst = lower_bound_ii(2, 4.0, 3);
  CHECK(inst.game.payoff() == Matrix::from_rows({{1, 1, 1}, {0, 0, 0}}));
  CHECK(inst.active_rounds == 2);
  const RunResult run = run_zero_sum(
      inst.game, PlayerSetup{Algorithm::kEntropyOftrl, std::nullopt, inst.x_adversary},
      PlayerSetup{Algorithm::kEntropyOftrl, std::nullopt, inst.y_adversary}, 20, 1);
  CHECK(run.players[0].rounds[0].played == SimplexVector::vertex(2, 1));
  CHECK(run.players[0].rounds[1].played == SimplexVector::vertex(2, 1));
  CHECK(run.players[0].rounds[2].played == run.players[0].rounds[2].suggested);
  CHECK(external_regret(run.players[0], PlaySource::kPlayed, UtilitySource::kTrue) >= 2.0 - 1e-9);
  CHECK(run.ledger.players[0].strategy_spent <= 4.0 + 1e-9);
}

TEST_CASE("lower bound (ii) with no budget is honest") {
  const LowerBoundInstance inst = lower_bound_ii(3, 0.0);
  CHECK(inst.active_rounds == 0);
  const RunResult run = run_zero_sum(
      inst.game, PlayerSetup{Algorithm::kEntropyOftrl, std::nullopt, inst.x_adversary},
      PlayerSetup{}, 30, 1);
  for (const auto& r : run.players[0].rounds) CHECK(r.played == r.suggested);
  CHECK(run.ledger.players[0].strategy_spent == 0.0);
}

TEST_CASE("lower bound (iii) strategies") {
  const auto a = lower_iii_strategy(1.0 / 3, -1.0 / 3);
  CHECK(a[0] == doctest::Approx(2.0 / 3));
  CHECK(a[1] == doctest::Approx(0.0));
  CHECK(a[2] == doctest::Approx(1.0 / 3));
  const auto b = lower_iii_strategy(-1.0 / 3, 1.0 / 3);
  CHECK(b[0] == doctest::Approx(0.0));
  CHECK(b[1] == doctest::Approx(2.0 / 3));

  const LowerBoundInstance inst = lower_bound_iii(40.0, 3);
  for (const auto& y : {a, b}) {
    CHECK_NOTHROW(validate_simplex(y));
    const auto g = inst.game.payoff().apply(y);
    CHECK(std::abs(g[0]) == doctest::Approx(1.0 / 3));
    CHECK(g[0] == doctest::Approx(-g[1]));
  }
  const RunResult run = run_zero_sum(inst.game, PlayerSetup{},
                                     PlayerSetup{Algorithm::kEntropyOftrl, std::nullopt,
                                                 inst.y_adversary},
                                     100, 1);
  CHECK(run.ledger.players[1].strategy_spent <= 40.0 + 1e-9);
  for (std::size_t t = 0; t < inst.active_rounds; ++t) {
    const auto& g = run.players[0].rounds[t].true_utility;
    CHECK(std::abs(g[0]) == doctest::Approx(1.0 / 3));
  }
}

TEST_CASE("lower bound (i) spends one per active round") {
  for (double c : {0.0, 7.0, 40.0, 5000.0}) {
    const std::size_t horizon = 300;
    const LowerBoundInstance inst = lower_bound_i(3, c, 9);
    const RunResult run = run_zero_sum(
        inst.game, PlayerSetup{Algorithm::kEntropyOftrl, std::nullopt, inst.x_adversary},
        PlayerSetup{}, horizon, 2);
    const double expected =
        std::min(std::floor(c / 2.0), static_cast<double>(horizon));
    CHECK(run.ledger.players[0].utility_spent == doctest::Approx(expected));
    if (c == 0.0) {
      for (const auto& r : run.players[0].rounds) {
        CHECK(r.observed_utility == std::vector<double>{0.0, 0.0, 0.0});
      }
    }
  }
}

TEST_CASE("generic adversaries respect budgets") {
  const ZeroSumGame game = ZeroSumGame::random(4, 4, 8);
  for (AdversaryKind k : {AdversaryKind::kFrontloaded, AdversaryKind::kPeriodic,
                          AdversaryKind::kTargeted, AdversaryKind::kRademacher}) {
    const AdversarySpec spec{k, 13.0, 7.5, 4};
    const RunResult run = run_zero_sum(game, PlayerSetup{Algorithm::kEntropyOftrl, std::nullopt, spec},
                                       PlayerSetup{Algorithm::kHedge, std::nullopt, spec}, 200, 1);
    for (const auto& l : run.ledger.players) {
      CHECK(l.strategy_spent <= 13.0 + 1e-9);
      CHECK(l.utility_spent <= 7.5 + 1e-9);
      CHECK(l.strategy_spent + l.utility_spent > 0.0);
    }
    for (const auto& p : run.players) {
      for (const auto& r : p.rounds) {
        for (double v : r.observed_utility) CHECK(std::abs(v) <= 1.0 + 1e-12);
      }
    }
  }
}

}  // namespace
}  // namespace cld
