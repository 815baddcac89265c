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

#include "cld/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cld/error.hpp"

namespace cld {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotASimplex: return "NotASimplex";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDegenerateBase: return "DegenerateBase";
    case ErrorCode::kHorizonTooSmall: return "HorizonTooSmall";
    case ErrorCode::kSolverDiverged: return "SolverDiverged";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kStateSpaceTooLarge: return "StateSpaceTooLarge";
    case ErrorCode::kInvalidAdversaryMove: return "InvalidAdversaryMove";
    case ErrorCode::kIncompleteTrace: return "IncompleteTrace";
    case ErrorCode::kEmptySequence: return "EmptySequence";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

SimplexVector SimplexVector::uniform(std::size_t dimension) {
  if (dimension == 0) fail(ErrorCode::kNotASimplex, "empty simplex");
  return SimplexVector(std::vector<double>(dimension, 1.0 / dimension));
}

SimplexVector SimplexVector::vertex(std::size_t dimension, std::size_t action) {
  if (action >= dimension) {
    fail(ErrorCode::kInvalidArgument, "vertex index out of range");
  }
  std::vector<double> v(dimension, 0.0);
  v[action] = 1.0;
  return SimplexVector(std::move(v));
}

SimplexVector validate_simplex(std::span<const double> v, double tol) {
  if (v.empty()) fail(ErrorCode::kNotASimplex, "empty vector");
  double sum = 0.0;
  for (double x : v) {
    if (!std::isfinite(x)) fail(ErrorCode::kNotASimplex, "non-finite entry");
    if (x < -tol) {
      fail(ErrorCode::kNotASimplex,
           "negative entry " + std::to_string(x));
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > tol) {
    fail(ErrorCode::kNotASimplex, "entries sum to " + std::to_string(sum));
  }
  std::vector<double> out(v.begin(), v.end());
  double clipped = 0.0;
  for (double& x : out) {
    x = std::max(x, 0.0);
    clipped += x;
  }
  if (clipped <= 0.0) fail(ErrorCode::kNotASimplex, "no positive mass");
  if (clipped != 1.0) {
    for (double& x : out) x /= clipped;
  }
  return SimplexVector(std::move(out));
}

double lp_norm(std::span<const double> v, Norm q) {
  double acc = 0.0;
  switch (q) {
    case Norm::kL1:
      for (double x : v) acc += std::abs(x);
      return acc;
    case Norm::kL2:
      for (double x : v) acc += x * x;
      return std::sqrt(acc);
    case Norm::kInf:
      for (double x : v) acc = std::max(acc, std::abs(x));
      return acc;
  }
  return acc;
}

double lp_distance(std::span<const double> a, std::span<const double> b,
                   Norm q) {
  require_same_size(a.size(), b.size(), "lp_distance");
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = std::abs(a[k] - b[k]);
    switch (q) {
      case Norm::kL1: acc += d; break;
      case Norm::kL2: acc += d * d; break;
      case Norm::kInf: acc = std::max(acc, d); break;
    }
  }
  return q == Norm::kL2 ? std::sqrt(acc) : acc;
}

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_size(a.size(), b.size(), "dot");
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
  return acc;
}

namespace {

void require_interior(std::span<const double> y) {
  for (double yk : y) {
    if (!(yk > 0.0)) {
      fail(ErrorCode::kDegenerateBase, "base point has a non-positive entry");
    }
  }
}

}  // namespace

double logbarrier_local_norm(std::span<const double> h,
                             std::span<const double> y) {
  require_same_size(h.size(), y.size(), "logbarrier_local_norm");
  require_interior(y);
  double acc = 0.0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    const double r = h[k] / y[k];
    acc += r * r;
  }
  return std::sqrt(acc);
}

double logbarrier_dual_norm(std::span<const double> w,
                            std::span<const double> y) {
  require_same_size(w.size(), y.size(), "logbarrier_dual_norm");
  require_interior(y);
  double acc = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const double r = w[k] * y[k];
    acc += r * r;
  }
  return std::sqrt(acc);
}

}  // namespace cld
