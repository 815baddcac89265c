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
#include <vector>

#include "cld/adversaries.hpp"
#include "cld/error.hpp"
#include "cld/metrics.hpp"
#include "doctest.h"

namespace cld {
namespace {

RoundTrace pure_round(std::size_t m, std::size_t action, std::vector<double> u) {
  const SimplexVector x = SimplexVector::vertex(m, action);
  return RoundTrace{x, x, u, u, 0.1, 0.0, 0.0, std::nullopt};
}

// Matching pennies, two rounds of pure play: x = H, T and y = T, H.
RunResult pennies_cycle() {
  RunResult run;
  run.horizon = 2;
  run.players.resize(2);
  run.players[0].next_suggestion = SimplexVector::uniform(2);
  run.players[1].next_suggestion = SimplexVector::uniform(2);
  run.players[0].rounds = {pure_round(2, 0, {-1, 1}), pure_round(2, 1, {1, -1})};
  run.players[1].rounds = {pure_round(2, 1, {-1, 1}), pure_round(2, 0, {1, -1})};
  run.ledger.players.resize(2);
  return run;
}

TEST_CASE("external regret examples") {
  CHECK(external_regret(VectorSequence{{0.5, 0.5}}, VectorSequence{{0.0, 0.0}}) == 0.0);
  CHECK(external_regret(VectorSequence{{1.0, 0.0}}, VectorSequence{{0.0, 1.0}}) == 1.0);
  CHECK(external_regret(VectorSequence{{0.5, 0.5}, {0.5, 0.5}},
                        VectorSequence{{1.0, 0.0}, {0.0, 1.0}}) == 0.0);
  CHECK_THROWS_AS(external_regret(VectorSequence{}, VectorSequence{}), Error);
  const std::vector<double> comparator = {0.0, 1.0};
  CHECK(comparator_regret(VectorSequence{{1.0, 0.0}}, VectorSequence{{0.0, 1.0}}, comparator) == 1.0);
}

TEST_CASE("swap regret examples") {
  const std::size_t horizon = 7;
  VectorSequence plays(horizon, {0.0, 1.0, 0.0}), utils(horizon, {0.3, -0.2, 0.9});
  CHECK(swap_regret(plays, utils) == doctest::Approx((0.9 + 0.2) * horizon));
  CHECK(swap_regret(VectorSequence{{0.2, 0.8}, {0.6, 0.4}},
                    VectorSequence{{0.4, 0.4}, {-1.0, -1.0}}) == 0.0);
  CHECK(swap_regret(VectorSequence{{0.5, 0.5}, {0.5, 0.5}},
                    VectorSequence{{1.0, 0.0}, {0.0, 1.0}}) == 0.0);
}

TEST_CASE("swap regret dominates external regret and matches the accumulator") {
  const auto seq = rademacher_sequence(4, 40, 3);
  VectorSequence plays;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    plays.push_back({0.2 + 0.01 * (t % 7), 0.5, 0.3 - 0.01 * (t % 7)});
  }
  RegretAccumulator acc(3);
  for (std::size_t t = 0; t < seq.size(); ++t) acc.add(plays[t], seq[t]);
  CHECK(swap_regret(plays, seq) >= external_regret(plays, seq) - 1e-12);
  CHECK(acc.swap() == doctest::Approx(swap_regret(plays, seq)).epsilon(1e-13));
  CHECK(acc.external() == doctest::Approx(external_regret(plays, seq)).epsilon(1e-13));
  const Matrix identity = Matrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(swap_regret_for(plays, seq, identity) == doctest::Approx(0.0));
}

TEST_CASE("nash gap examples") {
  const ZeroSumGame pennies(Matrix::from_rows({{1, -1}, {-1, 1}}));
  const std::vector<double> u = {0.5, 0.5}, e1 = {1.0, 0.0};
  CHECK(nash_gap(pennies, u, u) == 0.0);
  const ZeroSumGame diag(Matrix::from_rows({{1, 0}, {0, 1}}));
  CHECK(nash_gap(diag, e1, e1) == 1.0);
}

TEST_CASE("ce gap is the worst swap regret over T, not the external sum") {
  const RunResult run = pennies_cycle();
  const double rx = external_regret(run.players[0], PlaySource::kPlayed, UtilitySource::kTrue);
  const double ry = external_regret(run.players[1], PlaySource::kPlayed, UtilitySource::kTrue);
  CHECK(rx == 2.0);
  CHECK(ry == -2.0);
  CHECK(swap_regret(run.players[0], PlaySource::kPlayed, UtilitySource::kTrue) == 4.0);
  CHECK(ce_gap(run) == 2.0);
  CHECK(ce_gap(run) > (rx + ry) / 2.0);
  const GeneralSumGame g =
      GeneralSumGame::from_zero_sum(ZeroSumGame(Matrix::from_rows({{1, -1}, {-1, 1}})));
  CHECK(ce_gap_joint(g, run) == doctest::Approx(2.0));
}

TEST_CASE("ce gap at a pure Nash point") {
  const Matrix a = Matrix::from_rows({{0.6, 0.0}, {1.0, 0.2}});
  const Matrix b = Matrix::from_rows({{0.6, 1.0}, {0.0, 0.2}});
  const GeneralSumGame g = GeneralSumGame::from_bimatrix(a, b);
  RunResult run;
  run.horizon = 1;
  run.players.resize(2);
  for (auto& p : run.players) p.next_suggestion = SimplexVector::uniform(2);
  run.players[0].rounds = {pure_round(2, 1, {0.0, 0.2})};
  run.players[1].rounds = {pure_round(2, 1, {0.0, 0.2})};
  CHECK(ce_gap(run) == 0.0);
  CHECK(ce_gap_joint(g, run) == 0.0);
}

TEST_CASE("incomplete traces are rejected") {
  RunResult run = pennies_cycle();
  run.players[1].rounds.pop_back();
  try {
    ce_gap(run);
    FAIL("expected IncompleteTrace");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIncompleteTrace);
  }
}

TEST_CASE("path length anchors") {
  CHECK(path_length(VectorSequence(5, {0.3, 0.7}), Norm::kL1, PathAnchor::kSkipFirst) == 0.0);
  CHECK(path_length(VectorSequence{{1, 0}, {0, 1}}, Norm::kL1, PathAnchor::kSkipFirst) == 4.0);
  CHECK(path_length(VectorSequence{{1, 0}}, Norm::kInf, PathAnchor::kZero) == 1.0);
  CHECK(path_length(VectorSequence{{1, 0}}, Norm::kL1, PathAnchor::kUniform) == 1.0);
}

}  // namespace
}  // namespace cld
