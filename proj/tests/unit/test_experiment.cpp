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

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cld/config.hpp"
#include "cld/error.hpp"
#include "cld/experiment.hpp"
#include "cld/verify.hpp"
#include "doctest.h"

namespace cld {
namespace {

const std::string kConfigs = CLD_CONFIG_DIR;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& line : split(text, '\n')) rows.push_back(split(line, ','));
  return rows;
}

std::string column(const std::vector<std::vector<std::string>>& rows,
                   std::size_t row, const std::string& name) {
  const auto& header = rows[0];
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (header[k] == name) return rows[row][k];
  }
  FAIL("no column " << name);
  return {};
}

ErrorCode config_error(const std::string& text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

TEST_CASE("minimal honest run writes T round rows and one summary row") {
  const RunConfig c = load_config(kConfigs + "/honest_zero_sum.json");
  const RunArtifacts a = execute(c);
  const auto rows = csv(a.rounds_csv);
  REQUIRE(rows.size() == 12);
  CHECK(rows[1][0] == "round");
  CHECK(rows[10][1] == "10");
  CHECK(rows[11][0] == "summary");
  for (std::size_t r = 1; r < rows.size(); ++r) CHECK(rows[r].size() == rows[0].size());
  CHECK(execute(c).rounds_csv == a.rounds_csv);
  CHECK(execute(c).report_json == a.report_json);
}

TEST_CASE("spent columns are nondecreasing and finite") {
  const RunConfig c = load_config(kConfigs + "/corrupted_general_sum.json");
  const auto rows = csv(execute(c).rounds_csv);
  double prev = 0.0;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const double v = std::stod(column(rows, r, "p0_strategy_spent"));
    CHECK(v >= prev);
    prev = v;
    for (const auto& cell : rows[r]) {
      if (cell == "round" || cell == "summary") continue;
      CHECK(std::isfinite(std::stod(cell)));
    }
  }
  CHECK(prev > 0.0);
}

TEST_CASE("lower bound (ii) config reaches C/2") {
  const RunConfig c = load_config(kConfigs + "/lower_ii.json");
  const auto rows = csv(execute(c).rounds_csv);
  CHECK(std::stod(column(rows, rows.size() - 1, "p0_ext_x_u")) >= 50.0 - 1e-9);
}

TEST_CASE("a one-point sweep reproduces the run summary") {
  const RunConfig c = load_config(kConfigs + "/corrupted_general_sum.json");
  const auto run_rows = csv(execute(c).rounds_csv);
  const SweepGrid grid = parse_grid("{}", c);
  const auto sweep_rows = csv(sweep_csv(c, grid, 1));
  REQUIRE(sweep_rows.size() == 2);
  for (const char* name : {"p0_ext_x_u", "p1_swap_xh_ut", "p2_ext_xh_u", "ce_gap"}) {
    CHECK(column(sweep_rows, 1, name) == column(run_rows, run_rows.size() - 1, name));
  }
}

TEST_CASE("budget grid gives one row per budget and seed, independent of threads") {
  RunConfig c = load_config(kConfigs + "/frontloaded_zero_sum.json");
  c.horizon = 300;
  const SweepGrid grid = parse_grid(
      R"({"strategy_budgets": [0, 100, 400], "seeds": [1, 2]})", c);
  const std::string one = sweep_csv(c, grid, 1);
  const auto rows = csv(one);
  CHECK(rows.size() == 1 + 3 * 2);
  CHECK(sweep_csv(c, grid, 4) == one);
}

TEST_CASE("config errors") {
  const std::string ok = read_file(kConfigs + "/honest_zero_sum.json");
  CHECK_NOTHROW(parse_config(ok));
  CHECK(config_error("{") == ErrorCode::kConfigError);
  CHECK(config_error(R"({"schema": 2, "mode": "zero_sum", "horizon": 5, "seed": 1,
      "game": {"kind": "matrix", "payoff": [[0]]}, "players": [{"algorithm": "hedge"},
      {"algorithm": "hedge"}]})") == ErrorCode::kConfigError);
  CHECK(config_error(R"({"schema": 1, "mode": "zero_sum", "horizon": 0, "seed": 1,
      "game": {"kind": "matrix", "payoff": [[0]]}, "players": [{"algorithm": "hedge"},
      {"algorithm": "hedge"}]})") == ErrorCode::kConfigError);
  CHECK(config_error(R"({"schema": 1, "mode": "zero_sum", "horizon": 5, "seed": 1,
      "game": {"kind": "matrix", "payoff": [[0]]}, "players": [{"algorithm": "mystery"},
      {"algorithm": "hedge"}]})") == ErrorCode::kConfigError);
  CHECK(config_error(R"({"schema": 1, "mode": "general_sum", "horizon": 5, "seed": 1,
      "game": {"kind": "random", "actions": [2, 2]}, "players": [{"algorithm": "hedge"}]})") ==
        ErrorCode::kConfigError);
  CHECK(config_error(R"({"schema": 1, "mode": "zero_sum", "horizon": 5, "seed": 1,
      "game": {"kind": "matrix", "payoff": [[3]]}, "players": [{"algorithm": "hedge"},
      {"algorithm": "hedge"}]})") == ErrorCode::kConfigError);
  const RunConfig c = parse_config(ok);
  CHECK_THROWS_AS(parse_grid(R"({"players": []})", c), Error);
  CHECK_THROWS_AS(parse_grid(R"({"players": [5]})", c), Error);
  CHECK_THROWS_AS(parse_grid(R"({"seeds": []})", c), Error);
}

TEST_CASE("config round-trips through dump") {
  const RunConfig c = load_config(kConfigs + "/corrupted_general_sum.json");
  const RunConfig d = parse_config(dump_config(c));
  CHECK(dump_config(d) == dump_config(c));
  CHECK(execute(d).rounds_csv == execute(c).rounds_csv);
}

TEST_CASE("verify dispatch") {
  const SuiteReport r = run_suite("stationary", VerifyOptions{});
  CHECK(r.passed());
  CHECK(r.checks.size() == 2);
  CHECK(suite_json(r).find("\"passed\": true") != std::string::npos);
  CHECK_THROWS_AS(run_suite("nonsense", VerifyOptions{}), Error);
}

#ifdef CLD_TOOL_PATH
int tool(const std::string& args) {
  const std::string cmd = std::string(CLD_TOOL_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_CASE("command-line exit codes and outputs") {
  namespace fs = std::filesystem;
  const fs::path out = fs::temp_directory_path() / "cld_cli_test";
  fs::remove_all(out);
  CHECK(tool("run --config " + kConfigs + "/honest_zero_sum.json --out " +
             (out / "a").string()) == 0);
  CHECK(tool("run --config " + kConfigs + "/honest_zero_sum.json --out " +
             (out / "b").string()) == 0);
  CHECK(read_file((out / "a" / "rounds.csv").string()) ==
        read_file((out / "b" / "rounds.csv").string()));
  CHECK(fs::exists(out / "a" / "report.json"));
  CHECK(tool("run --config " + kConfigs + "/honest_zero_sum.json --out " +
             (out / "c").string() + " --seed 99") == 0);
  CHECK(tool("sweep --config " + kConfigs + "/frontloaded_zero_sum.json --grid " +
             kConfigs + "/budget_grid.json --threads 2 --out " + (out / "s").string()) == 0);
  CHECK(csv(read_file((out / "s" / "sweep.csv").string())).size() == 10);
  CHECK(tool("run --config /nonexistent.json --out " + (out / "x").string()) == 2);
  CHECK(tool("verify --suite stationary --json " + (out / "v.json").string()) == 0);
  CHECK(fs::exists(out / "v.json"));
  CHECK(tool("verify --suite nonsense") != 0);
  fs::remove_all(out);
}
#endif

}  // namespace
}  // namespace cld
