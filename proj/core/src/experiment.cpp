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

#include "cld/experiment.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "cld/error.hpp"

namespace cld {
namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kConfigError, "cannot write " + path.string());
  out << text;
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(ErrorCode::kConfigError, "cannot create " + dir + ": " + ec.message());
}

struct PlayerRunning {
  explicit PlayerRunning(std::size_t m)
      : x_u(m), xh_u(m), x_ut(m), xh_ut(m),
        prev_xh(m, 1.0 / static_cast<double>(m)),
        prev_ut(m, 0.0), prev_u(m, 0.0), sum_x(m, 0.0) {}

  RegretAccumulator x_u, xh_u, x_ut, xh_ut;
  std::vector<double> prev_xh, prev_ut, prev_u, sum_x;
  double strategy_spent = 0.0, utility_spent = 0.0;
  double path_xh = 0.0, path_ut = 0.0, path_u = 0.0;
  bool stable = true;
  double lr = 0.0;

  void add(const RoundTrace& r) {
    x_u.add(r.played.entries(), r.true_utility);
    xh_u.add(r.suggested.entries(), r.true_utility);
    x_ut.add(r.played.entries(), r.observed_utility);
    xh_ut.add(r.suggested.entries(), r.observed_utility);
    strategy_spent += lp_distance(r.played.entries(), r.suggested.entries(), Norm::kL1);
    utility_spent += lp_distance(r.observed_utility, r.true_utility, Norm::kInf);
    const auto sq = [](double v) { return v * v; };
    path_xh += sq(lp_distance(r.suggested.entries(), prev_xh, Norm::kL1));
    path_ut += sq(lp_distance(r.observed_utility, prev_ut, Norm::kInf));
    path_u += sq(lp_distance(r.true_utility, prev_u, Norm::kInf));
    prev_xh.assign(r.suggested.begin(), r.suggested.end());
    prev_ut = r.observed_utility;
    prev_u = r.true_utility;
    for (std::size_t k = 0; k < sum_x.size(); ++k) sum_x[k] += r.played[k];
    if (r.swap && !r.swap->stable) stable = false;
    lr = r.learning_rate;
  }

  void append(std::string& line) const {
    for (const RegretAccumulator* acc : {&x_u, &xh_u, &x_ut, &xh_ut}) {
      line += ',' + format_double(acc->external());
    }
    for (const RegretAccumulator* acc : {&x_u, &xh_u, &x_ut, &xh_ut}) {
      line += ',' + format_double(acc->swap());
    }
    line += ',' + format_double(lr);
    line += ',' + format_double(strategy_spent);
    line += ',' + format_double(utility_spent);
    line += stable ? ",1" : ",0";
    line += ',' + format_double(path_xh);
    line += ',' + format_double(path_ut);
    line += ',' + format_double(path_u);
  }
};

nlohmann::json variants_json(const RegretVariants& v) {
  return {{"x_u", v.played_true},
          {"xh_u", v.suggested_true},
          {"x_ut", v.played_observed},
          {"xh_ut", v.suggested_observed}};
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string rounds_csv(const RunResult& run, const GameModel& game) {
  require_complete(run);
  const std::size_t n = run.players.size();
  const bool zero_sum = std::holds_alternative<ZeroSumGame>(game);
  std::string out = "row_type,t";
  for (std::size_t i = 0; i < n; ++i) {
    const std::string p = ",p" + std::to_string(i) + "_";
    for (const char* c : {"ext_x_u", "ext_xh_u", "ext_x_ut", "ext_xh_ut",
                          "swap_x_u", "swap_xh_u", "swap_x_ut", "swap_xh_ut",
                          "lr", "strategy_spent", "utility_spent", "stable",
                          "path_xh_l1", "path_ut_inf", "path_u_inf"}) {
      out += p + c;
    }
  }
  if (zero_sum) out += ",nash_gap";
  out += ",ce_gap\n";

  std::vector<PlayerRunning> state;
  for (const auto& p : run.players) state.emplace_back(p.dimension());
  std::string last;
  for (std::size_t t = 0; t < run.horizon; ++t) {
    std::string line;
    double swap_worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      state[i].add(run.players[i].rounds[t]);
      state[i].append(line);
      swap_worst = std::max(swap_worst, state[i].x_u.swap());
    }
    const double tt = static_cast<double>(t + 1);
    if (zero_sum) {
      std::vector<double> xbar = state[0].sum_x, ybar = state[1].sum_x;
      for (double& v : xbar) v /= tt;
      for (double& v : ybar) v /= tt;
      line += ',' + format_double(nash_gap(std::get<ZeroSumGame>(game), xbar, ybar));
    }
    line += ',' + format_double(swap_worst / tt) + '\n';
    out += "round," + std::to_string(t + 1) + line;
    last = std::move(line);
  }
  out += "summary," + std::to_string(run.horizon) + last;
  return out;
}

std::string report_json(const RunConfig& config, const RunResult& run,
                        const RegretReport& report) {
  nlohmann::json j;
  j["schema"] = 1;
  j["horizon"] = run.horizon;
  j["seed"] = config.seed;
  j["config"] = nlohmann::json::parse(dump_config(config));
  nlohmann::json players = nlohmann::json::array();
  for (std::size_t i = 0; i < run.players.size(); ++i) {
    const auto& r = report.players[i];
    const auto& l = run.ledger.players[i];
    players.push_back({
        {"algorithm", std::string(to_string(run.players[i].algorithm))},
        {"external_regret", variants_json(r.external)},
        {"swap_regret", variants_json(r.swap)},
        {"path_xh_l1", r.path_suggested_l1},
        {"path_ut_inf", r.path_observed_inf},
        {"path_u_inf", r.path_true_inf},
        {"strategy_budget", l.strategy_budget},
        {"utility_budget", l.utility_budget},
        {"strategy_spent", l.strategy_spent},
        {"utility_spent", l.utility_spent},
        {"composite_general", l.composite_general()},
        {"composite_zero_sum", l.composite_zero_sum()},
        {"stability_flag", run.players[i].stability_flag},
    });
  }
  j["players"] = players;
  if (report.nash_gap) j["nash_gap"] = *report.nash_gap;
  j["ce_gap"] = report.ce_gap;
  return j.dump(2) + "\n";
}

RunArtifacts execute(const RunConfig& config) {
  const GameModel game = build_game(config);
  RunArtifacts a;
  a.result = run_game(game, config.players, config.horizon, config.seed);
  a.report = four_variant_report(a.result, game);
  a.rounds_csv = rounds_csv(a.result, game);
  a.report_json = report_json(config, a.result, a.report);
  return a;
}

RunArtifacts run_to_directory(const RunConfig& config,
                              const std::string& out_dir) {
  RunArtifacts a = execute(config);
  ensure_dir(out_dir);
  write_file(std::filesystem::path(out_dir) / "rounds.csv", a.rounds_csv);
  write_file(std::filesystem::path(out_dir) / "report.json", a.report_json);
  return a;
}

std::string sweep_csv(const RunConfig& base, const SweepGrid& grid,
                      std::size_t threads) {
  std::vector<RunConfig> points;
  for (double sb : grid.strategy_budgets) {
    for (double ub : grid.utility_budgets) {
      for (std::size_t h : grid.horizons) {
        for (std::uint64_t s : grid.seeds) {
          RunConfig c = base;
          c.horizon = h;
          c.seed = s;
          for (std::size_t p : grid.players) {
            c.players[p].adversary.strategy_budget = sb;
            c.players[p].adversary.utility_budget = ub;
          }
          points.push_back(std::move(c));
        }
      }
    }
  }
  const std::size_t n = base.players.size();
  std::vector<std::string> rows(points.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  const auto worker = [&] {
    for (std::size_t k = next++; k < points.size(); k = next++) {
      try {
        const RunConfig& c = points[k];
        const GameModel game = build_game(c);
        const RunResult run = run_game(game, c.players, c.horizon, c.seed);
        const RegretReport rep = four_variant_report(run, game);
        std::string line = format_double(c.players[grid.players[0]].adversary.strategy_budget) +
                           ',' + format_double(c.players[grid.players[0]].adversary.utility_budget) +
                           ',' + std::to_string(c.horizon) + ',' + std::to_string(c.seed);
        for (std::size_t i = 0; i < n; ++i) {
          const auto& r = rep.players[i];
          for (double v : {r.external.played_true, r.external.suggested_true,
                           r.external.played_observed, r.external.suggested_observed,
                           r.swap.played_true, r.swap.suggested_true,
                           r.swap.played_observed, r.swap.suggested_observed,
                           run.ledger.players[i].strategy_spent,
                           run.ledger.players[i].utility_spent}) {
            line += ',' + format_double(v);
          }
          line += run.players[i].stability_flag ? ",1" : ",0";
        }
        if (rep.nash_gap) line += ',' + format_double(*rep.nash_gap);
        line += ',' + format_double(rep.ce_gap) + '\n';
        rows[k] = std::move(line);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  const std::size_t workers =
      std::max<std::size_t>(1, std::min(threads, points.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  std::string out = "strategy_budget,utility_budget,horizon,seed";
  for (std::size_t i = 0; i < n; ++i) {
    const std::string p = ",p" + std::to_string(i) + "_";
    for (const char* c : {"ext_x_u", "ext_xh_u", "ext_x_ut", "ext_xh_ut",
                          "swap_x_u", "swap_xh_u", "swap_x_ut", "swap_xh_ut",
                          "strategy_spent", "utility_spent", "stable"}) {
      out += p + c;
    }
  }
  if (base.mode == RunMode::kZeroSum) out += ",nash_gap";
  out += ",ce_gap\n";
  for (const auto& r : rows) out += r;
  return out;
}

void sweep_to_directory(const RunConfig& base, const SweepGrid& grid,
                        std::size_t threads, const std::string& out_dir) {
  const std::string csv = sweep_csv(base, grid, threads);
  ensure_dir(out_dir);
  write_file(std::filesystem::path(out_dir) / "sweep.csv", csv);
}

}  // namespace cld
