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

#include "cld/error.hpp"
#include "cld/oftrl_logbarrier.hpp"
#include "cld/rng.hpp"
#include "doctest.h"

namespace cld {
namespace {

TEST_CASE("expert rate and cap") {
  const LogBarrierExpertState s = LogBarrierExpertState::fresh(2, 2, 100);
  CHECK(std::sqrt((2.0 * std::log(100.0) / 8.0) / 4.0) ==
        doctest::Approx(0.536).epsilon(1e-3));
  CHECK(expert_lr(s) == doctest::Approx(0.00138107).epsilon(1e-6));
  CHECK(expert_lr_cap(4, 1) == 0.001953125);

  LogBarrierExpertState t = s;
  double before = expert_lr(t);
  for (int k = 0; k < 50; ++k) {
    t = expert_observe(t, std::vector<double>{k % 2 ? 1.0 : -1.0, 0.3});
    const double now = expert_lr(t);
    CHECK(now <= before);
    before = now;
  }
}

TEST_CASE("horizon below 3 is rejected") {
  try {
    LogBarrierExpertState::fresh(2, 1, 2);
    FAIL("expected HorizonTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kHorizonTooSmall);
  }
}

TEST_CASE("logbarrier_argmax examples") {
  for (double v : logbarrier_argmax(std::vector<double>{0.0, 0.0}, 0.7)) {
    CHECK(v == doctest::Approx(0.5));
  }
  for (double v : logbarrier_argmax(std::vector<double>{2.5, 2.5, 2.5, 2.5}, 3.0)) {
    CHECK(v == doctest::Approx(0.25));
  }
  const LogBarrierSolution s = solve_logbarrier(std::vector<double>{1.0, 0.0}, 1.0);
  CHECK(std::abs(s.multiplier - (3.0 + std::sqrt(5.0)) / 2.0) < 1e-8);
  CHECK(std::abs(s.point[0] - 0.6180339887498949) < 1e-8);
  CHECK(std::abs(s.point[1] - 0.3819660112501051) < 1e-8);
  CHECK(s.kkt_residual <= kLogBarrierKktTolerance);
}

TEST_CASE("logbarrier solver matches a fine grid on the 1-simplex") {
  for (double eta : {0.2, 1.0, 5.0}) {
    const std::vector<double> w = {0.3, -0.8};
    double best = -1e300, arg = 0.0;
    for (int k = 1; k < 100000; ++k) {
      const double y = k / 100000.0;
      const double v = y * w[0] + (1 - y) * w[1] + (std::log(y) + std::log(1 - y)) / eta;
      if (v > best) {
        best = v;
        arg = y;
      }
    }
    CHECK(std::abs(logbarrier_argmax(w, eta)[0] - arg) < 2e-5);
  }
}

TEST_CASE("logbarrier solver handles extreme inputs") {
  SplitMix64 rng(99);
  for (int k = 0; k < 200; ++k) {
    std::vector<double> w(2 + rng.below(40));
    for (double& v : w) v = rng.uniform(-1e3, 1e3);
    const LogBarrierSolution s = solve_logbarrier(w, rng.uniform(1e-4, 50.0));
    CHECK(s.kkt_residual <= kLogBarrierKktTolerance);
    for (double v : s.point) CHECK(v > 0.0);
  }
}

TEST_CASE("expert step") {
  const LogBarrierExpertState fresh = LogBarrierExpertState::fresh(3, 2, 50);
  for (double v : expert_step(fresh)) CHECK(v == doctest::Approx(1.0 / 3.0));

  LogBarrierExpertState z = fresh;
  for (int k = 0; k < 5; ++k) {
    z = expert_observe(z, std::vector<double>{0.0, 0.0, 0.0});
    for (double v : expert_step(z)) CHECK(v == doctest::Approx(1.0 / 3.0));
  }

  LogBarrierExpertState one = LogBarrierExpertState::fresh(2, 1, 10);
  one = expert_observe(one, std::vector<double>{1.0, 0.0});
  const SimplexVector a = expert_step(one);
  const SimplexVector b = logbarrier_argmax(std::vector<double>{2.0, 0.0}, expert_lr(one));
  CHECK(a[0] == doctest::Approx(b[0]).epsilon(1e-14));
  CHECK(a[1] == doctest::Approx(b[1]).epsilon(1e-14));
}

}  // namespace
}  // namespace cld
