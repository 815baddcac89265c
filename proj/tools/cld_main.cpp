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

// Command-line front end: run, sweep and verify.
//
//   cld run    --config game.json --out results/
//   cld sweep  --config game.json --grid grid.json --out results/ --threads 4
//   cld verify --suite stationary [--json report.json]
//
// Exit codes: 0 success, 1 verification failure, 2 configuration error,
// 3 engine error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cld/config.hpp"
#include "cld/error.hpp"
#include "cld/experiment.hpp"
#include "cld/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitEngine = 3;

void warn_unstable(const cld::RunResult& run) {
  for (std::size_t i = 0; i < run.players.size(); ++i) {
    const auto& p = run.players[i];
    if (p.algorithm == cld::Algorithm::kSwapLogBarrier && !p.stability_flag) {
      std::cerr << "warning: player " << i
                << " left the stable regime; stability bounds do not apply\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corruption-robust learning in games"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  std::size_t threads = 1;
  app.add_option("--seed", seed, "Override the seed in the config");
  app.add_option("--threads", threads, "Maximum sweep parallelism")
      ->check(CLI::PositiveNumber);

  std::string config_path, grid_path, out_dir, suite, json_path;

  CLI::App* run = app.add_subcommand("run", "Play one configured game");
  run->add_option("--config", config_path, "JSON run config")->required();
  run->add_option("--out", out_dir, "Output directory")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "Run a budget/seed/horizon grid");
  sweep->add_option("--config", config_path, "JSON run config template")->required();
  sweep->add_option("--grid", grid_path, "JSON parameter grid")->required();
  sweep->add_option("--out", out_dir, "Output directory")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(cld::suite_names()));
  verify->add_option("--json", json_path, "Also write the JSON report here");

  // Subcommand options may also carry the global flags.
  for (CLI::App* sub : {run, sweep, verify}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run || *sweep) {
      cld::RunConfig config = cld::load_config(config_path);
      if (seed) config.seed = *seed;
      if (*run) {
        const cld::RunArtifacts out = cld::run_to_directory(config, out_dir);
        warn_unstable(out.result);
        std::cout << "wrote " << out_dir << "/rounds.csv and " << out_dir
                  << "/report.json\n";
      } else {
        const cld::SweepGrid grid = cld::load_grid(grid_path, config);
        cld::sweep_to_directory(config, grid, threads, out_dir);
        std::cout << "wrote " << out_dir << "/sweep.csv\n";
      }
      return 0;
    }

    cld::VerifyOptions options;
    if (seed) options.seed = *seed;
    options.threads = threads;
    const cld::SuiteReport report = cld::run_suite(suite, options);
    std::cout << cld::suite_text(report);
    if (!json_path.empty()) {
      std::ofstream f(json_path);
      f << cld::suite_json(report);
      if (!f) {
        std::cerr << "error: cannot write " << json_path << "\n";
        return kExitEngine;
      }
    }
    return report.passed() ? 0 : kExitVerifyFailed;
  } catch (const cld::Error& e) {
    std::cerr << "error: " << cld::to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == cld::ErrorCode::kConfigError ? kExitConfig : kExitEngine;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEngine;
  }
}
