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

#include "cld/corruption.hpp"
#include "cld/error.hpp"
#include "doctest.h"

namespace cld {
namespace {

TEST_CASE("zero deltas leave everything unchanged") {
  PlayerLedger l{3.0, 2.0, 0.0, 0.0};
  const SimplexVector x = SimplexVector::uniform(3);
  const std::vector<double> u = {0.1, -0.2, 0.3};
  const CorruptionOutcome o = apply_corruption(l, x, u, AdversaryMove{});
  CHECK(o.played == x);
  CHECK(o.observed == u);
  CHECK(l.strategy_spent == 0.0);
  CHECK(l.utility_spent == 0.0);

  const CorruptionOutcome z = apply_corruption(
      l, x, u, AdversaryMove{{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}});
  CHECK(z.played == x);
  CHECK(z.observed == u);
}

TEST_CASE("exhausted budgets scale any delta to zero") {
  PlayerLedger l{1.0, 1.0, 1.0, 1.0};
  const SimplexVector x = SimplexVector::vertex(2, 0);
  const SimplexVector p = apply_strategy_corruption(l, x, std::vector<double>{-1.0, 1.0});
  CHECK(p == x);
  const std::vector<double> u = {0.5, 0.5};
  CHECK(apply_utility_corruption(l, u, std::vector<double>{1.0, -1.0}) == u);
  CHECK(l.strategy_spent == 1.0);
  CHECK(l.utility_spent == 1.0);
}

TEST_CASE("partial budget scales the delta") {
  PlayerLedger l{0.5, 0.0, 0.0, 0.0};
  const SimplexVector p =
      apply_strategy_corruption(l, SimplexVector::vertex(2, 0), std::vector<double>{-1.0, 1.0});
  CHECK(p[0] == doctest::Approx(0.75));
  CHECK(p[1] == doctest::Approx(0.25));
  CHECK(l.strategy_spent == doctest::Approx(0.5));
  CHECK(l.strategy_spent <= l.strategy_budget + 1e-9);
  CHECK(l.strategy_remaining() == doctest::Approx(0.0));
}

TEST_CASE("utility corruption spends the l_inf norm") {
  PlayerLedger l{0.0, 10.0, 0.0, 0.0};
  const std::vector<double> u = {0.2, -0.4};
  const UtilityVector o = apply_utility_corruption(l, u, std::vector<double>{0.5, -0.1});
  CHECK(o[0] == doctest::Approx(0.7));
  CHECK(o[1] == doctest::Approx(-0.5));
  CHECK(l.utility_spent == doctest::Approx(0.5));
}

TEST_CASE("moves that leave the simplex are invalid") {
  PlayerLedger l{5.0, 0.0, 0.0, 0.0};
  try {
    apply_strategy_corruption(l, SimplexVector::uniform(2), std::vector<double>{1.0, -1.0});
    FAIL("expected InvalidAdversaryMove");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidAdversaryMove);
  }
  CHECK(l.strategy_spent == 0.0);
}

TEST_CASE("composite budgets") {
  const PlayerLedger l{4.0, 4.0, 3.0, 1.5};
  CHECK(l.composite_general() == 9.0);
  CHECK(l.composite_zero_sum() == 6.0);
}

}  // namespace
}  // namespace cld
