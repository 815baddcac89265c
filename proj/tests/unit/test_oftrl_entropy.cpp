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

#include "cld/oftrl_entropy.hpp"
#include "doctest.h"

namespace cld {
namespace {

TEST_CASE("entropy_lr examples") {
  CHECK(entropy_lr(EntropyOftrlState::fresh(2)) == doctest::Approx(0.7071068));
  CHECK(entropy_lr(EntropyOftrlState::fresh(1000)) == doctest::Approx(0.7071068));

  EntropyOftrlState s = EntropyOftrlState::fresh(3);
  s.path_accumulator = 4.0;
  CHECK(log_plus(3.0) == 4.0);
  CHECK(entropy_lr(s) == doctest::Approx(0.5));

  EntropyOftrlState h = EntropyOftrlState::fresh(100);
  CHECK(log_plus(100.0) == doctest::Approx(4.60517).epsilon(1e-5));
  CHECK(entropy_lr(h) == doctest::Approx(0.7071068));
  CHECK(entropy_lr(h) <= kEntropyRateCap);
}

TEST_CASE("entropy_oftrl_step examples") {
  const SimplexVector u = entropy_oftrl_step(EntropyOftrlState::fresh(5));
  for (double v : u) CHECK(v == doctest::Approx(0.2));

  const std::vector<double> scores = {1.0, 0.0};
  const SimplexVector s = softmax(scores, 1.0);
  CHECK(s[0] == doctest::Approx(0.7310586).epsilon(1e-7));
  CHECK(s[1] == doctest::Approx(0.2689414).epsilon(1e-7));

  const std::vector<double> flat = {3.0, 3.0, 3.0};
  for (double v : softmax(flat, 0.3)) CHECK(v == doctest::Approx(1.0 / 3.0));

  // Huge scores must not overflow.
  const std::vector<double> big = {1e6, 0.0};
  CHECK(softmax(big, 1.0)[0] == 1.0);
}

TEST_CASE("entropy_observe path accumulator") {
  EntropyOftrlState s = EntropyOftrlState::fresh(2);
  s = entropy_observe(s, std::vector<double>{1.0, -1.0});
  CHECK(s.path_accumulator == 1.0);
  s = entropy_observe(s, std::vector<double>{1.0, -1.0});
  CHECK(s.path_accumulator == 1.0);
  CHECK(s.cumulative_utility[0] == 2.0);
  CHECK(s.round == 3);

  EntropyOftrlState t = EntropyOftrlState::fresh(2);
  t = entropy_observe(t, std::vector<double>{1.0, 0.0});
  t = entropy_observe(t, std::vector<double>{0.0, 1.0});
  CHECK(t.path_accumulator == 2.0);
}

TEST_CASE("entropy step uses last plus cumulative") {
  EntropyOftrlState s = EntropyOftrlState::fresh(2);
  s = entropy_observe(s, std::vector<double>{0.5, 0.0});
  const double eta = entropy_lr(s);
  const SimplexVector x = entropy_oftrl_step(s);
  CHECK(x[0] / x[1] == doctest::Approx(std::exp(eta * 1.0)));
}

TEST_CASE("hedge and constant OFTRL") {
  const std::vector<double> zero = {0.0, 0.0, 0.0};
  for (double v : hedge_step(zero, 0.5)) CHECK(v == doctest::Approx(1.0 / 3.0));
  const std::vector<double> c = {std::log(3.0), 0.0};
  const SimplexVector h = hedge_step(c, 1.0);
  CHECK(h[0] == doctest::Approx(0.75));
  CHECK(h[1] == doctest::Approx(0.25));

  EntropyOftrlState s = EntropyOftrlState::fresh(3);
  for (const auto& u : std::vector<std::vector<double>>{
           {0.2, -0.4, 1.0}, {-1.0, 0.3, 0.3}, {0.9, 0.9, -0.1}}) {
    s = entropy_observe(s, u);
    const SimplexVector a = entropy_oftrl_step(s);
    const SimplexVector b = constant_oftrl_step(s, entropy_lr(s));
    for (std::size_t k = 0; k < 3; ++k) CHECK(a[k] == b[k]);
  }
}

}  // namespace
}  // namespace cld
