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

#ifndef CLD_CONFIG_HPP_
#define CLD_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cld/engine.hpp"

namespace cld {

enum class RunMode { kZeroSum, kGeneralSum };

struct GameSpec {
  enum class Kind { kMatrix, kRandom, kBimatrix, kTensor, kNone };
  Kind kind = Kind::kNone;
  std::vector<std::vector<double>> a;          // matrix / bimatrix A
  std::vector<std::vector<double>> b;          // bimatrix B
  std::vector<std::size_t> actions;            // random / tensor / lower bounds
  std::vector<std::vector<double>> utilities;  // tensor, one table per player
  std::optional<std::uint64_t> seed;           // random; defaults to run seed
};

struct RunConfig {
  RunMode mode = RunMode::kZeroSum;
  std::size_t horizon = 1;
  std::uint64_t seed = 0;
  GameSpec game;
  std::vector<PlayerSetup> players;
};

// Schema version 1:
//
// {
//   "schema": 1,
//   "mode": "zero_sum" | "general_sum",
//   "horizon": T, "seed": s,
//   "game": {"kind": "matrix", "payoff": [[...], ...]}
//         | {"kind": "random", "actions": [m1, m2, ...], "seed": g}
//         | {"kind": "bimatrix", "a": [[...]], "b": [[...]]}
//         | {"kind": "tensor", "actions": [...], "utilities": [[...], ...]},
//   "players": [{"algorithm": "entropy_oftrl" | "hedge" | "constant_oftrl"
//                             | "swap_logbarrier",
//                "rate": r,
//                "adversary": {"kind": ..., "strategy_budget": C,
//                              "utility_budget": C, "seed": s}}, ...]
// }
//
// A lower_i / lower_ii adversary on player 0 or lower_iii on player 1 builds
// its own zero-sum game; "game" is then optional and only "actions" is read.
// All schema violations throw kConfigError.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);
std::string dump_config(const RunConfig& config);

GameModel build_game(const RunConfig& config);

struct SweepGrid {
  std::vector<double> strategy_budgets;
  std::vector<double> utility_budgets;
  std::vector<std::size_t> horizons;
  std::vector<std::uint64_t> seeds;
  std::vector<std::size_t> players;  // whose adversary budgets are swept
};

// {"strategy_budgets": [...], "utility_budgets": [...], "horizons": [...],
//  "seeds": [...], "players": [...]}. Missing lists keep the template value;
// "players" defaults to [0].
SweepGrid parse_grid(const std::string& json_text, const RunConfig& base);
SweepGrid load_grid(const std::string& path, const RunConfig& base);

std::string read_file(const std::string& path);

}  // namespace cld

#endif  // CLD_CONFIG_HPP_
