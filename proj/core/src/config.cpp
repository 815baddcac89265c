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

#include "cld/config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cld/adversaries.hpp"
#include "cld/error.hpp"

namespace cld {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
  fail(ErrorCode::kConfigError, what);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    bad(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <typename T>
T get_as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    bad(std::string("field '") + what + "' has the wrong type");
  }
}

std::uint64_t get_seed(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return get_as<std::uint64_t>(j, what);
}

double get_budget(const json& j, const char* key) {
  if (!j.contains(key)) return 0.0;
  const json& v = j.at(key);
  if (!v.is_number()) bad(std::string(key) + " must be a number");
  const double d = v.get<double>();
  if (!(d >= 0.0)) bad(std::string(key) + " must be >= 0");
  return d;
}

std::vector<std::vector<double>> get_matrix(const json& j, const char* key) {
  auto m = get_as<std::vector<std::vector<double>>>(field(j, key), key);
  if (m.empty() || m[0].empty()) bad(std::string(key) + " is empty");
  for (const auto& row : m) {
    if (row.size() != m[0].size()) bad(std::string(key) + " is ragged");
  }
  return m;
}

bool is_lower_kind(AdversaryKind k) {
  return k == AdversaryKind::kLowerI || k == AdversaryKind::kLowerII ||
         k == AdversaryKind::kLowerIII;
}

const char* kind_name(GameSpec::Kind k) {
  switch (k) {
    case GameSpec::Kind::kMatrix: return "matrix";
    case GameSpec::Kind::kRandom: return "random";
    case GameSpec::Kind::kBimatrix: return "bimatrix";
    case GameSpec::Kind::kTensor: return "tensor";
    case GameSpec::Kind::kNone: return "none";
  }
  return "none";
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("config must be a JSON object");
  if (get_as<int>(field(j, "schema"), "schema") != 1) bad("unsupported schema");

  RunConfig c;
  const auto mode = get_as<std::string>(field(j, "mode"), "mode");
  if (mode == "zero_sum") {
    c.mode = RunMode::kZeroSum;
  } else if (mode == "general_sum") {
    c.mode = RunMode::kGeneralSum;
  } else {
    bad("mode must be zero_sum or general_sum");
  }
  const json& h = field(j, "horizon");
  if (!h.is_number_integer() || h.get<long long>() < 1) {
    bad("horizon must be an integer >= 1");
  }
  c.horizon = h.get<std::size_t>();
  c.seed = get_seed(field(j, "seed"), "seed");

  const json& players = field(j, "players");
  if (!players.is_array() || players.empty()) bad("players must be a nonempty array");
  bool lower = false;
  for (const json& p : players) {
    PlayerSetup s;
    s.algorithm =
        parse_algorithm(get_as<std::string>(field(p, "algorithm"), "algorithm"));
    if (p.contains("rate")) {
      if (!p.at("rate").is_number() || !(p.at("rate").get<double>() > 0.0)) {
        bad("rate must be a positive number");
      }
      s.rate = p.at("rate").get<double>();
    }
    if (p.contains("adversary")) {
      const json& a = p.at("adversary");
      s.adversary.kind =
          parse_adversary_kind(get_as<std::string>(field(a, "kind"), "kind"));
      s.adversary.strategy_budget = get_budget(a, "strategy_budget");
      s.adversary.utility_budget = get_budget(a, "utility_budget");
      if (a.contains("seed")) s.adversary.seed = get_seed(a.at("seed"), "adversary seed");
      lower = lower || is_lower_kind(s.adversary.kind);
    }
    c.players.push_back(std::move(s));
  }

  if (j.contains("game")) {
    const json& g = j.at("game");
    const auto kind = get_as<std::string>(field(g, "kind"), "game.kind");
    if (g.contains("actions")) {
      c.game.actions = get_as<std::vector<std::size_t>>(g.at("actions"), "actions");
    }
    if (kind == "matrix") {
      c.game.kind = GameSpec::Kind::kMatrix;
      c.game.a = get_matrix(g, "payoff");
    } else if (kind == "random") {
      c.game.kind = GameSpec::Kind::kRandom;
      if (c.game.actions.empty()) bad("random game needs actions");
      if (g.contains("seed")) c.game.seed = get_seed(g.at("seed"), "game seed");
    } else if (kind == "bimatrix") {
      c.game.kind = GameSpec::Kind::kBimatrix;
      c.game.a = get_matrix(g, "a");
      c.game.b = get_matrix(g, "b");
    } else if (kind == "tensor") {
      c.game.kind = GameSpec::Kind::kTensor;
      if (c.game.actions.empty()) bad("tensor game needs actions");
      c.game.utilities = get_as<std::vector<std::vector<double>>>(
          field(g, "utilities"), "utilities");
    } else if (kind == "lower_bound") {
      c.game.kind = GameSpec::Kind::kNone;
    } else {
      bad("unknown game kind '" + kind + "'");
    }
  } else if (!lower) {
    bad("missing field 'game'");
  }

  // Compatibility checks.
  if (c.mode == RunMode::kZeroSum) {
    if (c.players.size() != 2) bad("zero_sum mode needs exactly 2 players");
    if (c.game.kind == GameSpec::Kind::kBimatrix ||
        c.game.kind == GameSpec::Kind::kTensor) {
      bad("zero_sum mode takes a matrix or random game");
    }
    if (c.game.kind == GameSpec::Kind::kRandom && c.game.actions.size() != 2) {
      bad("zero_sum random game needs two action counts");
    }
  } else {
    if (lower) bad("lower-bound adversaries need zero_sum mode");
    if (c.game.kind == GameSpec::Kind::kMatrix && c.players.size() != 2) {
      bad("a matrix game has exactly 2 players");
    }
  }
  for (std::size_t i = 0; i < c.players.size(); ++i) {
    const AdversaryKind k = c.players[i].adversary.kind;
    if ((k == AdversaryKind::kLowerI || k == AdversaryKind::kLowerII) && i != 0) {
      bad("lower_i and lower_ii corrupt the row player (player 0)");
    }
    if (k == AdversaryKind::kLowerIII && i != 1) {
      bad("lower_iii corrupts the column player (player 1)");
    }
  }
  int lower_count = 0;
  for (const auto& p : c.players) lower_count += is_lower_kind(p.adversary.kind);
  if (lower_count > 1) bad("at most one lower-bound adversary per run");
  // Build once so game-shape errors surface as configuration errors.
  try {
    const GameModel g = build_game(c);
    if (player_count(g) != c.players.size()) {
      bad("game has " + std::to_string(player_count(g)) + " players, config lists " +
          std::to_string(c.players.size()));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfigError) throw;
    bad(std::string("invalid game: ") + e.what());
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  return parse_config(read_file(path));
}

std::string dump_config(const RunConfig& c) {
  json j;
  j["schema"] = 1;
  j["mode"] = c.mode == RunMode::kZeroSum ? "zero_sum" : "general_sum";
  j["horizon"] = c.horizon;
  j["seed"] = c.seed;
  if (c.game.kind != GameSpec::Kind::kNone || !c.game.actions.empty()) {
    json g;
    g["kind"] = c.game.kind == GameSpec::Kind::kNone ? "lower_bound"
                                                     : kind_name(c.game.kind);
    if (!c.game.actions.empty()) g["actions"] = c.game.actions;
    if (c.game.kind == GameSpec::Kind::kMatrix) g["payoff"] = c.game.a;
    if (c.game.kind == GameSpec::Kind::kBimatrix) {
      g["a"] = c.game.a;
      g["b"] = c.game.b;
    }
    if (c.game.kind == GameSpec::Kind::kTensor) g["utilities"] = c.game.utilities;
    if (c.game.seed) g["seed"] = *c.game.seed;
    j["game"] = g;
  }
  json ps = json::array();
  for (const auto& p : c.players) {
    json pj;
    pj["algorithm"] = std::string(to_string(p.algorithm));
    if (p.rate) pj["rate"] = *p.rate;
    json a;
    a["kind"] = std::string(to_string(p.adversary.kind));
    a["strategy_budget"] = p.adversary.strategy_budget;
    a["utility_budget"] = p.adversary.utility_budget;
    if (p.adversary.seed) a["seed"] = *p.adversary.seed;
    pj["adversary"] = a;
    ps.push_back(pj);
  }
  j["players"] = ps;
  return j.dump(2);
}

GameModel build_game(const RunConfig& c) {
  const auto action = [&](std::size_t i, std::size_t fallback) {
    return i < c.game.actions.size() ? c.game.actions[i] : fallback;
  };
  for (const auto& p : c.players) {
    switch (p.adversary.kind) {
      case AdversaryKind::kLowerI:
        return lower_bound_i(action(0, 2), p.adversary.utility_budget,
                             p.adversary.seed.value_or(c.seed))
            .game;
      case AdversaryKind::kLowerII:
        return lower_bound_ii(action(0, 2), p.adversary.strategy_budget,
                              action(1, 2))
            .game;
      case AdversaryKind::kLowerIII:
        return lower_bound_iii(p.adversary.strategy_budget,
                               p.adversary.seed.value_or(c.seed))
            .game;
      default:
        break;
    }
  }
  const std::uint64_t game_seed = c.game.seed.value_or(c.seed);
  switch (c.game.kind) {
    case GameSpec::Kind::kMatrix: {
      ZeroSumGame zs(Matrix::from_rows(c.game.a));
      if (c.mode == RunMode::kZeroSum) return zs;
      return GeneralSumGame::from_zero_sum(zs);
    }
    case GameSpec::Kind::kRandom:
      if (c.mode == RunMode::kZeroSum) {
        return ZeroSumGame::random(c.game.actions[0], c.game.actions[1],
                                   game_seed);
      }
      return GeneralSumGame::random(c.game.actions, game_seed);
    case GameSpec::Kind::kBimatrix:
      return GeneralSumGame::from_bimatrix(Matrix::from_rows(c.game.a),
                                           Matrix::from_rows(c.game.b));
    case GameSpec::Kind::kTensor:
      return GeneralSumGame(c.game.actions, c.game.utilities);
    case GameSpec::Kind::kNone:
      break;
  }
  bad("no game given");
}

SweepGrid parse_grid(const std::string& json_text, const RunConfig& base) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    bad(std::string("invalid grid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("grid must be a JSON object");
  SweepGrid g;
  g.players = j.contains("players")
                  ? get_as<std::vector<std::size_t>>(j.at("players"), "players")
                  : std::vector<std::size_t>{0};
  if (g.players.empty()) bad("grid players must be nonempty");
  for (std::size_t p : g.players) {
    if (p >= base.players.size()) bad("grid player index out of range");
  }
  const PlayerSetup& first = base.players[g.players[0]];
  g.strategy_budgets =
      j.contains("strategy_budgets")
          ? get_as<std::vector<double>>(j.at("strategy_budgets"), "strategy_budgets")
          : std::vector<double>{first.adversary.strategy_budget};
  g.utility_budgets =
      j.contains("utility_budgets")
          ? get_as<std::vector<double>>(j.at("utility_budgets"), "utility_budgets")
          : std::vector<double>{first.adversary.utility_budget};
  g.horizons = j.contains("horizons")
                   ? get_as<std::vector<std::size_t>>(j.at("horizons"), "horizons")
                   : std::vector<std::size_t>{base.horizon};
  g.seeds = j.contains("seeds")
                ? get_as<std::vector<std::uint64_t>>(j.at("seeds"), "seeds")
                : std::vector<std::uint64_t>{base.seed};
  if (g.strategy_budgets.empty() || g.utility_budgets.empty() ||
      g.horizons.empty() || g.seeds.empty()) {
    bad("grid lists must be nonempty");
  }
  for (double b : g.strategy_budgets) if (!(b >= 0.0)) bad("budgets must be >= 0");
  for (double b : g.utility_budgets) if (!(b >= 0.0)) bad("budgets must be >= 0");
  for (std::size_t h : g.horizons) if (h < 1) bad("horizons must be >= 1");
  return g;
}

SweepGrid load_grid(const std::string& path, const RunConfig& base) {
  return parse_grid(read_file(path), base);
}

}  // namespace cld
