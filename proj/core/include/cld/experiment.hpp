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

#ifndef CLD_EXPERIMENT_HPP_
#define CLD_EXPERIMENT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "cld/config.hpp"
#include "cld/engine.hpp"
#include "cld/metrics.hpp"

namespace cld {

struct RunArtifacts {
  RunResult result;
  RegretReport report;
  std::string rounds_csv;   // T round rows + 1 summary row
  std::string report_json;
};

RunArtifacts execute(const RunConfig& config);

// Round-by-round CSV. Columns: row_type, t, then per player i
//   p<i>_ext_x_u p<i>_ext_xh_u p<i>_ext_x_ut p<i>_ext_xh_ut
//   p<i>_swap_x_u p<i>_swap_xh_u p<i>_swap_x_ut p<i>_swap_xh_ut
//   p<i>_lr p<i>_strategy_spent p<i>_utility_spent p<i>_stable
//   p<i>_path_xh_l1 p<i>_path_ut_inf p<i>_path_u_inf
// then nash_gap (zero-sum only) and ce_gap. Values are running totals up to
// round t; the summary row repeats the final values.
std::string rounds_csv(const RunResult& run, const GameModel& game);

std::string report_json(const RunConfig& config, const RunResult& run,
                        const RegretReport& report);

// Writes rounds.csv and report.json under out_dir (created if missing).
RunArtifacts run_to_directory(const RunConfig& config,
                              const std::string& out_dir);

// One row per (strategy budget, utility budget, horizon, seed), in that
// nesting order, with final regrets and gaps. Grid points run on up to
// `threads` worker threads; output order does not depend on scheduling.
std::string sweep_csv(const RunConfig& base, const SweepGrid& grid,
                      std::size_t threads);

void sweep_to_directory(const RunConfig& base, const SweepGrid& grid,
                        std::size_t threads, const std::string& out_dir);

std::string format_double(double v);

}  // namespace cld

#endif  // CLD_EXPERIMENT_HPP_
