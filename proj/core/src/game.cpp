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

#include "cld/game.hpp"

#include <cmath>
#include <string>

#include "cld/error.hpp"
#include "cld/rng.hpp"

namespace cld {
namespace {

void check_unit_range(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v) || v < -1.0 || v > 1.0) {
      fail(ErrorCode::kInvalidArgument,
           std::string(what) + " entry " + std::to_string(v) +
               " outside [-1, 1]");
    }
  }
}

}  // namespace

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows[0].empty()) {
    fail(ErrorCode::kInvalidArgument, "matrix needs at least one entry");
  }
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_size(rows[i].size(), m.cols(), "matrix row");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<double> Matrix::apply(std::span<const double> y) const {
  require_same_size(y.size(), cols_, "A y");
  std::vector<double> out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += data_[i * cols_ + j] * y[j];
    out[i] = s;
  }
  return out;
}

std::vector<double> Matrix::apply_transpose(std::span<const double> x) const {
  require_same_size(x.size(), rows_, "A^T x");
  std::vector<double> out(cols_, 0.0);
  for (std::size_t j = 0; j < cols_; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) s += data_[i * cols_ + j] * x[i];
    out[j] = s;
  }
  return out;
}

double Matrix::bilinear(std::span<const double> x,
                        std::span<const double> y) const {
  return dot(x, apply(y));
}

ZeroSumGame::ZeroSumGame(Matrix payoff) : payoff_(std::move(payoff)) {
  if (payoff_.rows() == 0 || payoff_.cols() == 0) {
    fail(ErrorCode::kInvalidArgument, "empty payoff matrix");
  }
  check_unit_range(payoff_.data(), "payoff");
}

ZeroSumGame ZeroSumGame::random(std::size_t rows, std::size_t cols,
                                std::uint64_t seed) {
  auto rng = derive_stream(seed, 0, 0, StreamPurpose::kGame);
  Matrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng.uniform(-1.0, 1.0);
  }
  return ZeroSumGame(std::move(a));
}

GeneralSumGame::GeneralSumGame(std::vector<std::size_t> action_counts,
                               std::vector<std::vector<double>> utilities)
    : counts_(std::move(action_counts)), utilities_(std::move(utilities)) {
  if (counts_.empty()) fail(ErrorCode::kInvalidArgument, "no players");
  require_same_size(utilities_.size(), counts_.size(), "utility tables");
  for (std::size_t m : counts_) {
    if (m == 0) fail(ErrorCode::kInvalidArgument, "player with no actions");
    if (joint_size_ > kMaxJointActions / m) {
      fail(ErrorCode::kStateSpaceTooLarge, "joint action space above 1e7");
    }
    joint_size_ *= m;
  }
  for (const auto& table : utilities_) {
    require_same_size(table.size(), joint_size_, "utility table");
    check_unit_range(table, "utility");
  }
}

GeneralSumGame GeneralSumGame::from_zero_sum(const ZeroSumGame& game) {
  const Matrix& a = game.payoff();
  Matrix b(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) b(i, j) = -a(i, j);
  }
  return from_bimatrix(a, b);
}

GeneralSumGame GeneralSumGame::from_bimatrix(const Matrix& a, const Matrix& b) {
  require_same_size(a.rows(), b.rows(), "bimatrix rows");
  require_same_size(a.cols(), b.cols(), "bimatrix cols");
  std::vector<double> ua(a.data().begin(), a.data().end());
  std::vector<double> ub(b.data().begin(), b.data().end());
  return GeneralSumGame({a.rows(), a.cols()}, {std::move(ua), std::move(ub)});
}

GeneralSumGame GeneralSumGame::random(std::vector<std::size_t> action_counts,
                                      std::uint64_t seed) {
  std::size_t joint = 1;
  for (std::size_t m : action_counts) {
    if (m == 0 || joint > kMaxJointActions / m) {
      fail(ErrorCode::kStateSpaceTooLarge, "joint action space above 1e7");
    }
    joint *= m;
  }
  std::vector<std::vector<double>> tables(action_counts.size());
  for (std::size_t i = 0; i < tables.size(); ++i) {
    auto rng = derive_stream(seed, i, 0, StreamPurpose::kGame);
    tables[i].resize(joint);
    for (double& v : tables[i]) v = rng.uniform(-1.0, 1.0);
  }
  return GeneralSumGame(std::move(action_counts), std::move(tables));
}

std::size_t GeneralSumGame::joint_index(
    std::span<const std::size_t> actions) const {
  require_same_size(actions.size(), counts_.size(), "joint action");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (actions[i] >= counts_[i]) {
      fail(ErrorCode::kInvalidArgument, "action index out of range");
    }
    idx = idx * counts_[i] + actions[i];
  }
  return idx;
}

double GeneralSumGame::utility(std::size_t player,
                               std::span<const std::size_t> actions) const {
  return utilities_.at(player)[joint_index(actions)];
}

UtilityVector expected_utility(const GeneralSumGame& game, std::size_t player,
                               std::span<const SimplexVector> profile) {
  const std::size_t n = game.player_count();
  require_same_size(profile.size(), n, "strategy profile");
  if (player >= n) fail(ErrorCode::kInvalidArgument, "player out of range");
  for (std::size_t j = 0; j < n; ++j) {
    require_same_size(profile[j].size(), game.action_count(j), "strategy");
  }
  if (game.joint_size() > kMaxJointActions) {
    fail(ErrorCode::kStateSpaceTooLarge, "joint action space above 1e7");
  }
  const auto& table = game.table(player);
  UtilityVector out(game.action_count(player), 0.0);

  // Odometer over joint actions in table order; prefix[j] is the product of
  // opponent probabilities for the digits before j.
  std::vector<std::size_t> digit(n, 0);
  std::vector<double> prefix(n + 1, 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    prefix[j + 1] = prefix[j] * (j == player ? 1.0 : profile[j][0]);
  }
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    out[digit[player]] += prefix[n] * table[idx];
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (++digit[j] < game.action_count(j)) break;
      digit[j] = 0;
    }
    for (; j < n; ++j) {
      prefix[j + 1] =
          prefix[j] * (j == player ? 1.0 : profile[j][digit[j]]);
    }
  }
  return out;
}

ZeroSumFeedback zero_sum_round(const ZeroSumGame& game, const SimplexVector& x,
                               const SimplexVector& y) {
  require_same_size(x.size(), game.rows(), "x strategy");
  require_same_size(y.size(), game.cols(), "y strategy");
  return ZeroSumFeedback{game.payoff().apply(y.entries()),
                         game.payoff().apply_transpose(x.entries())};
}

}  // namespace cld
