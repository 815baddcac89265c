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

#ifndef CLD_SIMPLEX_HPP_
#define CLD_SIMPLEX_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace cld {

// Tolerance used when library code re-validates its own solver outputs.
inline constexpr double kSimplexTolerance = 1e-9;

// Per-action payoffs. True expected utilities live in [-1, 1]; observed
// (corrupted) ones may be shifted by the adversary within the engine clamp.
using UtilityVector = std::vector<double>;

// A probability distribution over a finite action set. Entries are
// nonnegative and sum to one within 1e-12; the only way to build one from
// raw numbers is validate_simplex, which enforces that.
class SimplexVector {
 public:
  static SimplexVector uniform(std::size_t dimension);
  static SimplexVector vertex(std::size_t dimension, std::size_t action);

  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t k) const { return entries_[k]; }
  std::span<const double> entries() const noexcept { return entries_; }
  const std::vector<double>& values() const noexcept { return entries_; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  friend bool operator==(const SimplexVector&, const SimplexVector&) = default;

 private:
  explicit SimplexVector(std::vector<double> entries)
      : entries_(std::move(entries)) {}

  friend SimplexVector validate_simplex(std::span<const double> v, double tol);

  std::vector<double> entries_;
};

enum class Norm { kL1, kL2, kInf };

// Accepts v when every entry is >= -tol and |sum - 1| <= tol. Negative
// round-off is clipped to zero and the result renormalized. Throws
// kNotASimplex otherwise, and for empty or non-finite input.
SimplexVector validate_simplex(std::span<const double> v,
                               double tol = kSimplexTolerance);

double lp_norm(std::span<const double> v, Norm q);
double lp_distance(std::span<const double> a, std::span<const double> b,
                   Norm q);

double dot(std::span<const double> a, std::span<const double> b);

// Local norm of h at y induced by the log barrier -sum_k log y_k, whose
// Hessian is diag(1 / y_k^2): sqrt(sum_k h_k^2 / y_k^2).
double logbarrier_local_norm(std::span<const double> h,
                             std::span<const double> y);

// Dual of the local norm above: sqrt(sum_k w_k^2 y_k^2). Never exceeds
// max_k |w_k| when y lies on the simplex.
double logbarrier_dual_norm(std::span<const double> w,
                            std::span<const double> y);

}  // namespace cld

#endif  // CLD_SIMPLEX_HPP_
