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

#include <vector>

#include "cld/error.hpp"
#include "cld/game.hpp"
#include "doctest.h"

namespace cld {
namespace {

SimplexVector sv(std::vector<double> v) { return validate_simplex(v); }

TEST_CASE("zero_sum_round examples") {
  const ZeroSumGame zero(Matrix(2, 3));
  const ZeroSumFeedback f0 = zero_sum_round(zero, SimplexVector::uniform(2), SimplexVector::uniform(3));
  CHECK(f0.g == std::vector<double>{0.0, 0.0});
  CHECK(f0.l == std::vector<double>{0.0, 0.0, 0.0});

  const ZeroSumGame pennies(Matrix::from_rows({{1, -1}, {-1, 1}}));
  const ZeroSumFeedback f1 = zero_sum_round(pennies, sv({0.3, 0.7}), SimplexVector::uniform(2));
  CHECK(f1.g[0] == 0.0);
  CHECK(f1.g[1] == 0.0);

  const ZeroSumGame g3(Matrix::from_rows({{1, 0, -1}, {0, 1, -1}}));
  const ZeroSumFeedback f2 = zero_sum_round(g3, SimplexVector::uniform(2), sv({2.0 / 3, 0, 1.0 / 3}));
  CHECK(f2.g[0] == doctest::Approx(1.0 / 3.0));
  CHECK(f2.g[1] == doctest::Approx(-1.0 / 3.0));
  CHECK(f2.l[2] == doctest::Approx(-1.0));
}

TEST_CASE("payoffs outside [-1, 1] are rejected") {
  CHECK_THROWS_AS(ZeroSumGame(Matrix::from_rows({{1.5, 0}, {0, 0}})), Error);
  CHECK_THROWS_AS(Matrix::from_rows({{1, 0}, {0}}), Error);
}

TEST_CASE("two-player expected utility is the matrix-vector product") {
  const ZeroSumGame zs = ZeroSumGame::random(3, 4, 17);
  const GeneralSumGame g = GeneralSumGame::from_zero_sum(zs);
  const std::vector<SimplexVector> profile = {sv({0.2, 0.5, 0.3}), sv({0.1, 0.2, 0.3, 0.4})};
  const UtilityVector u0 = expected_utility(g, 0, profile);
  const UtilityVector ay = zs.payoff().apply(profile[1].entries());
  for (std::size_t k = 0; k < 3; ++k) CHECK(u0[k] == doctest::Approx(ay[k]).epsilon(1e-14));
  const UtilityVector u1 = expected_utility(g, 1, profile);
  const UtilityVector atx = zs.payoff().apply_transpose(profile[0].entries());
  for (std::size_t k = 0; k < 4; ++k) CHECK(u1[k] == doctest::Approx(-atx[k]).epsilon(1e-14));
}

TEST_CASE("all-ones tensor") {
  const std::vector<std::size_t> counts = {2, 3, 2};
  std::vector<std::vector<double>> tables(3, std::vector<double>(12, 1.0));
  const GeneralSumGame g(counts, tables);
  const std::vector<SimplexVector> profile = {sv({1, 0}), sv({0.2, 0.3, 0.5}), sv({0.6, 0.4})};
  for (std::size_t i = 0; i < 3; ++i) {
    for (double v : expected_utility(g, i, profile)) CHECK(v == doctest::Approx(1.0));
  }
}

TEST_CASE("three-player coordination game") {
  const std::vector<std::size_t> counts = {2, 2, 2};
  std::vector<std::vector<double>> tables(3, std::vector<double>(8, 0.0));
  for (auto& t : tables) t[0] = t[7] = 1.0;
  const GeneralSumGame g(counts, tables);
  const std::vector<std::size_t> same = {1, 1, 1};
  CHECK(g.utility(0, same) == 1.0);
  CHECK(g.joint_index(same) == 7);
  const std::vector<SimplexVector> profile(3, SimplexVector::uniform(2));
  const UtilityVector u = expected_utility(g, 0, profile);
  CHECK(u[0] == doctest::Approx(0.25));
  CHECK(u[1] == doctest::Approx(0.25));
}

TEST_CASE("oversized joint action spaces are rejected") {
  try {
    GeneralSumGame::random(std::vector<std::size_t>(8, 10), 1);
    FAIL("expected StateSpaceTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kStateSpaceTooLarge);
  }
}

TEST_CASE("random games are seeded") {
  CHECK(ZeroSumGame::random(4, 4, 3).payoff() == ZeroSumGame::random(4, 4, 3).payoff());
  CHECK(!(ZeroSumGame::random(4, 4, 3).payoff() == ZeroSumGame::random(4, 4, 4).payoff()));
}

}  // namespace
}  // namespace cld
