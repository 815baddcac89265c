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

#ifndef CLD_GAME_HPP_
#define CLD_GAME_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cld/simplex.hpp"

namespace cld {

// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  std::span<const double> data() const noexcept { return data_; }

  std::vector<double> apply(std::span<const double> y) const;            // A y
  std::vector<double> apply_transpose(std::span<const double> x) const;  // A^T x
  double bilinear(std::span<const double> x, std::span<const double> y) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Row player (x) maximizes x^T A y, column player (y) minimizes it.
class ZeroSumGame {
 public:
  // Throws kInvalidArgument unless every entry lies in [-1, 1].
  explicit ZeroSumGame(Matrix payoff);

  static ZeroSumGame random(std::size_t rows, std::size_t cols,
                            std::uint64_t seed);

  const Matrix& payoff() const noexcept { return payoff_; }
  std::size_t rows() const noexcept { return payoff_.rows(); }
  std::size_t cols() const noexcept { return payoff_.cols(); }

 private:
  Matrix payoff_;
};

inline constexpr std::size_t kMaxJointActions = 10000000;

// n-player game with one utility table per player, indexed by the joint
// action in row-major order (player 0 most significant).
class GeneralSumGame {
 public:
  GeneralSumGame(std::vector<std::size_t> action_counts,
                 std::vector<std::vector<double>> utilities);

  static GeneralSumGame from_zero_sum(const ZeroSumGame& game);
  static GeneralSumGame from_bimatrix(const Matrix& a, const Matrix& b);
  static GeneralSumGame random(std::vector<std::size_t> action_counts,
                               std::uint64_t seed);

  std::size_t player_count() const noexcept { return counts_.size(); }
  std::size_t action_count(std::size_t i) const { return counts_[i]; }
  const std::vector<std::size_t>& action_counts() const noexcept {
    return counts_;
  }
  std::size_t joint_size() const noexcept { return joint_size_; }

  std::size_t joint_index(std::span<const std::size_t> actions) const;
  double utility(std::size_t player, std::span<const std::size_t> actions) const;
  const std::vector<double>& table(std::size_t player) const {
    return utilities_[player];
  }

 private:
  std::vector<std::size_t> counts_;
  std::vector<std::vector<double>> utilities_;
  std::size_t joint_size_ = 1;
};

// u_i(a_i) = E_{a_-i ~ x_-i}[u_i(a_i, a_-i)]. profile[i] is ignored.
UtilityVector expected_utility(const GeneralSumGame& game, std::size_t player,
                               std::span<const SimplexVector> profile);

struct ZeroSumFeedback {
  UtilityVector g;  // A y, the row player's reward vector
  UtilityVector l;  // A^T x, the column player's loss vector
};

ZeroSumFeedback zero_sum_round(const ZeroSumGame& game, const SimplexVector& x,
                               const SimplexVector& y);

}  // namespace cld

#endif  // CLD_GAME_HPP_
