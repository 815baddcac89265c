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
#include "cld/simplex.hpp"
#include "doctest.h"

namespace cld {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::kInvalidArgument;
}

TEST_CASE("validate_simplex accepts exact points unchanged") {
  const std::vector<double> v = {0.5, 0.5};
  const SimplexVector s = validate_simplex(v, 1e-9);
  CHECK(s[0] == 0.5);
  CHECK(s[1] == 0.5);
}

TEST_CASE("validate_simplex rejects a short sum") {
  const std::vector<double> v = {0.7, 0.2};
  CHECK(code_of([&] { validate_simplex(v, 1e-9); }) == ErrorCode::kNotASimplex);
}

TEST_CASE("validate_simplex renormalizes within tolerance") {
  const std::vector<double> v = {1.0 - 1e-13, 1e-13 + 1e-13};
  const SimplexVector s = validate_simplex(v, 1e-9);
  CHECK(s[0] + s[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s[1] > 0.0);
}

TEST_CASE("validate_simplex clips tiny negatives") {
  const std::vector<double> v = {1.0 + 1e-12, -1e-12};
  const SimplexVector s = validate_simplex(v);
  CHECK(s[1] == 0.0);
  CHECK(s[0] == 1.0);
  const std::vector<double> bad = {1.1, -0.1};
  CHECK(code_of([&] { validate_simplex(bad); }) == ErrorCode::kNotASimplex);
  const std::vector<double> nan = {NAN, 1.0};
  CHECK(code_of([&] { validate_simplex(nan); }) == ErrorCode::kNotASimplex);
}

TEST_CASE("uniform and vertex") {
  const SimplexVector u = SimplexVector::uniform(4);
  for (double v : u) CHECK(v == 0.25);
  const SimplexVector e = SimplexVector::vertex(3, 2);
  CHECK(e[2] == 1.0);
  CHECK(e[0] == 0.0);
}

TEST_CASE("lp_distance") {
  const std::vector<double> a = {1.0, 0.0}, b = {0.0, 1.0};
  CHECK(lp_distance(a, a, Norm::kL1) == 0.0);
  CHECK(lp_distance(a, b, Norm::kL1) == 2.0);
  CHECK(lp_distance(a, b, Norm::kInf) == 1.0);
  CHECK(lp_distance(a, b, Norm::kL2) == doctest::Approx(std::sqrt(2.0)));
  const std::vector<double> c = {1.0};
  CHECK(code_of([&] { lp_distance(a, c, Norm::kL1); }) ==
        ErrorCode::kDimensionMismatch);
}

TEST_CASE("logbarrier_local_norm") {
  const std::vector<double> y = {0.5, 0.5};
  const std::vector<double> zero = {0.0, 0.0};
  CHECK(logbarrier_local_norm(zero, y) == 0.0);
  const std::vector<double> h = {0.1, -0.1};
  CHECK(logbarrier_local_norm(h, y) == doctest::Approx(0.2828427).epsilon(1e-7));
  const std::vector<double> h3 = {0.01, -0.01, 0.0}, y3 = {0.1, 0.1, 0.8};
  CHECK(logbarrier_local_norm(h3, y3) == doctest::Approx(0.1414214).epsilon(1e-7));
}

TEST_CASE("logbarrier_dual_norm") {
  const std::vector<double> y = {0.5, 0.5};
  const std::vector<double> zero = {0.0, 0.0}, ones = {1.0, 1.0};
  CHECK(logbarrier_dual_norm(zero, y) == 0.0);
  CHECK(logbarrier_dual_norm(ones, y) == doctest::Approx(0.7071068).epsilon(1e-7));
  const std::vector<double> w = {-3.0, 2.0, 0.5}, y3 = {0.2, 0.3, 0.5};
  CHECK(logbarrier_dual_norm(w, y3) <= 3.0);
}

}  // namespace
}  // namespace cld
