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

#include "cld/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cld/adversaries.hpp"
#include "cld/audits.hpp"
#include "cld/error.hpp"
#include "cld/experiment.hpp"
#include "cld/metrics.hpp"
#include "cld/oftrl_logbarrier.hpp"
#include "cld/rng.hpp"
#include "cld/swap_minimizer.hpp"

namespace cld {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v, int precision = 6) {
  std::ostringstream ss;
  ss.precision(precision);
  ss << v;
  return ss.str();
}

CheckResult check(int criterion, std::string name, bool passed,
                  std::string detail) {
  return CheckResult{criterion, std::move(name), passed, std::move(detail)};
}

CheckResult runtime_check(int criterion, double seconds, double limit) {
  return check(criterion, "runtime", seconds < limit,
               fmt(seconds, 3) + " s (limit " + fmt(limit) + " s)");
}

std::vector<double> random_row(SplitMix64& rng, std::size_t m, int style,
                               std::size_t diagonal) {
  std::vector<double> row(m);
  double total = 0.0;
  for (std::size_t b = 0; b < m; ++b) {
    double u = rng.uniform();
    if (style == 1) u = u * u * u * u;  // heavy-tailed, near-sparse rows
    row[b] = u;
    total += u;
  }
  if (total == 0.0) {
    row[diagonal] = 1.0;
    total = 1.0;
  }
  for (double& v : row) v /= total;
  if (style == 2) {  // lazy chains close to the identity
    for (double& v : row) v *= 0.1;
    row[diagonal] += 0.9;
  }
  return row;
}

Matrix random_stochastic_matrix(SplitMix64& rng, std::size_t m, int style) {
  Matrix q(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    const auto row = random_row(rng, m, style, a);
    for (std::size_t b = 0; b < m; ++b) q(a, b) = row[b];
  }
  return q;
}

TransitionMatrix to_transition(const Matrix& q) {
  std::vector<SimplexVector> rows;
  for (std::size_t a = 0; a < q.rows(); ++a) {
    std::vector<double> r(q.cols());
    for (std::size_t b = 0; b < q.cols(); ++b) r[b] = q(a, b);
    rows.push_back(validate_simplex(r));
  }
  return TransitionMatrix::from_rows(std::move(rows));
}

AdversarySpec random_adversary(SplitMix64& rng, std::size_t horizon,
                               double max_fraction) {
  static constexpr AdversaryKind kinds[] = {
      AdversaryKind::kFrontloaded, AdversaryKind::kPeriodic,
      AdversaryKind::kTargeted, AdversaryKind::kRademacher};
  AdversarySpec s;
  s.kind = kinds[rng.below(4)];
  const double scale = max_fraction * static_cast<double>(horizon);
  s.strategy_budget = rng.uniform() < 0.75 ? rng.uniform(0.0, scale) : 0.0;
  s.utility_budget = rng.uniform() < 0.75 ? rng.uniform(0.0, scale) : 0.0;
  s.seed = rng();
  return s;
}

// ---------------------------------------------------------------------------

SuiteReport suite_stationary(const VerifyOptions& opt, RunAuditor*) {
  SuiteReport rep;
  const auto start = Clock::now();
  double worst = 0.0;
  std::size_t failures = 0;
  for (std::size_t k = 0; k < 1000; ++k) {
    auto rng = derive_stream(opt.seed, k, 0, StreamPurpose::kGame);
    const std::size_t m = 2 + k % 31;
    const auto q = to_transition(random_stochastic_matrix(rng, m, static_cast<int>(k % 3)));
    const SimplexVector x = stationary_distribution(q);
    const double r = stationarity_residual(q, x.entries());
    worst = std::max(worst, r);
    if (!(r <= 1e-8)) ++failures;
  }
  rep.checks.push_back(check(1, "stationary residual <= 1e-8 on 1000 matrices, m in 2..32",
                             failures == 0,
                             "worst residual " + fmt(worst) + ", failures " +
                                 std::to_string(failures)));
  rep.checks.push_back(runtime_check(1, seconds_since(start), 10.0));
  return rep;
}

SuiteReport suite_reduction_identity(const VerifyOptions& opt, RunAuditor* audit) {
  SuiteReport rep;
  const auto start = Clock::now();
  double worst = 0.0;
  std::size_t cases = 0;
  for (std::size_t k = 0; k < 100; ++k) {
    auto rng = derive_stream(opt.seed, k, 0, StreamPurpose::kSweep);
    const std::size_t n = 2 + rng.below(2);
    std::vector<std::size_t> counts(n);
    for (auto& m : counts) m = 2 + rng.below(4);
    const std::size_t horizon = 3 + rng.below(198);
    const GeneralSumGame game = GeneralSumGame::random(counts, rng());
    std::vector<PlayerSetup> setup(n);
    for (auto& p : setup) {
      p.algorithm = Algorithm::kSwapLogBarrier;
      if (k % 2 == 1) p.adversary = random_adversary(rng, horizon, 0.3);
    }
    const RunResult run = run_general_sum(game, setup, horizon, rng());
    audit->add(run, GameModel(game));
    for (std::size_t i = 0; i < n; ++i) {
      const auto& trace = run.players[i];
      const std::size_t m = trace.dimension();
      const VectorSequence xh = plays_of(trace, PlaySource::kSuggested);
      const VectorSequence ut = utilities_of(trace, UtilitySource::kObserved);
      for (int rep_m = 0; rep_m < 10; ++rep_m) {
        const Matrix mm = random_stochastic_matrix(rng, m, rep_m % 2);
        const double lhs = swap_regret_for(xh, ut, mm);
        double rhs = 0.0;
        for (std::size_t a = 0; a < m; ++a) {
          for (std::size_t t = 0; t < horizon; ++t) {
            const auto& y = trace.rounds[t].swap->expert_outputs[a];
            double s = 0.0;
            for (std::size_t b = 0; b < m; ++b) s += (mm(a, b) - y[b]) * ut[t][b];
            rhs += xh[t][a] * s;
          }
        }
        worst = std::max(worst, std::abs(lhs - rhs));
        ++cases;
      }
    }
  }
  rep.checks.push_back(check(2, "swap regret equals the sum of expert regrets",
                             worst <= 1e-8,
                             std::to_string(cases) + " (run, player, M) cases, worst |diff| " +
                                 fmt(worst)));
  rep.checks.push_back(runtime_check(2, seconds_since(start), 120.0));
  return rep;
}

// Exhaustive grid maximization of <y, w> + (1/eta) sum log y over the simplex
// with step h; m = 4 uses a 1e-2 pass to locate a 0.1-wide box first.
std::vector<double> grid_oracle(const std::vector<double>& w, double eta) {
  const std::size_t m = w.size();
  const auto value = [&](const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t k = 0; k < m; ++k) s += y[k] * w[k] + std::log(y[k]) / eta;
    return s;
  };
  std::vector<double> best;
  double best_val = -1e300;
  // Enumerate integer points on {sum n_k = N, n_k >= 1}, optionally within
  // [lo_k, hi_k] for the first m - 1 coordinates.
  const auto search = [&](int big_n, const std::vector<int>& lo,
                          const std::vector<int>& hi) {
    std::vector<int> n(m, 0);
    std::vector<double> y(m);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
      if (k + 1 == m) {
        if (left < 1) return;
        n[k] = left;
        for (std::size_t j = 0; j < m; ++j) y[j] = static_cast<double>(n[j]) / big_n;
        const double v = value(y);
        if (v > best_val) {
          best_val = v;
          best = y;
        }
        return;
      }
      const int top = std::min(hi[k], left - static_cast<int>(m - k - 1));
      for (int c = std::max(lo[k], 1); c <= top; ++c) {
        n[k] = c;
        rec(k + 1, left - c);
      }
    };
    rec(0, big_n);
  };
  if (m <= 3) {
    search(1000, std::vector<int>(m, 1), std::vector<int>(m, 1000));
    return best;
  }
  search(100, std::vector<int>(m, 1), std::vector<int>(m, 100));
  std::vector<int> lo(m), hi(m);
  for (std::size_t k = 0; k < m; ++k) {
    const int centre = static_cast<int>(std::lround(best[k] * 1000));
    lo[k] = std::max(1, centre - 50);
    hi[k] = std::min(1000, centre + 50);
  }
  best_val = -1e300;
  search(1000, lo, hi);
  return best;
}

SuiteReport suite_logbarrier_solver(const VerifyOptions& opt, RunAuditor*) {
  SuiteReport rep;
  const auto start = Clock::now();
  double worst_kkt = 0.0;
  int worst_iters = 0;
  std::size_t diverged = 0;
  for (std::size_t k = 0; k < 10000; ++k) {
    auto rng = derive_stream(opt.seed, k, 1, StreamPurpose::kGame);
    const std::size_t m = 2 + rng.below(31);
    std::vector<double> w(m);
    const double spread = std::pow(10.0, rng.uniform(-2.0, 2.0));
    for (double& v : w) v = rng.uniform(-spread, spread);
    const double eta = std::pow(10.0, rng.uniform(-3.0, 1.0));
    try {
      const LogBarrierSolution s = solve_logbarrier(w, eta);
      worst_kkt = std::max(worst_kkt, s.kkt_residual);
      worst_iters = std::max(worst_iters, s.iterations);
      for (double y : s.point) {
        if (!(y > 0.0)) ++diverged;
      }
    } catch (const Error&) {
      ++diverged;
    }
  }
  rep.checks.push_back(check(3, "KKT residual <= 1e-10 on 10^4 random instances",
                             diverged == 0 && worst_kkt <= 1e-10,
                             "worst residual " + fmt(worst_kkt) + ", max iterations " +
                                 std::to_string(worst_iters) + ", failures " +
                                 std::to_string(diverged)));

  const SimplexVector golden = logbarrier_argmax(std::vector<double>{1.0, 0.0}, 1.0);
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double gerr = std::max(std::abs(golden[0] - phi), std::abs(golden[1] - (1.0 - phi)));
  rep.checks.push_back(check(3, "golden-ratio instance w = (1, 0), eta = 1", gerr <= 1e-8,
                             "y = (" + fmt(golden[0], 10) + ", " + fmt(golden[1], 10) +
                                 "), error " + fmt(gerr)));

  double worst_grid = 0.0;
  for (std::size_t k = 0; k < 200; ++k) {
    auto rng = derive_stream(opt.seed, k, 2, StreamPurpose::kGame);
    const std::size_t m = 2 + k % 3;
    std::vector<double> w(m);
    for (double& v : w) v = rng.uniform(-1.0, 1.0);
    const double eta = rng.uniform(0.2, 5.0);
    const SimplexVector y = logbarrier_argmax(w, eta);
    const std::vector<double> g = grid_oracle(w, eta);
    worst_grid = std::max(worst_grid, lp_distance(y.entries(), g, Norm::kInf));
  }
  rep.checks.push_back(check(3, "grid-search oracle agreement within 2e-3 on 200 instances, m <= 4",
                             worst_grid <= 2e-3, "worst l_inf gap " + fmt(worst_grid)));
  rep.checks.push_back(runtime_check(3, seconds_since(start), 30.0));
  return rep;
}

std::vector<RunResult> relation_corpus(const VerifyOptions& opt,
                                       std::vector<GameModel>& games) {
  std::vector<RunResult> runs;
  for (std::size_t k = 0; k < 50; ++k) {
    auto rng = derive_stream(opt.seed, k, 3, StreamPurpose::kSweep);
    const std::size_t horizon = 50 + rng.below(351);
    std::vector<PlayerSetup> setup;
    if (k < 25) {
      const std::size_t mx = 2 + rng.below(5), my = 2 + rng.below(5);
      games.emplace_back(ZeroSumGame::random(mx, my, rng()));
      static constexpr Algorithm algs[] = {Algorithm::kEntropyOftrl, Algorithm::kHedge,
                                           Algorithm::kConstantOftrl,
                                           Algorithm::kSwapLogBarrier};
      setup.resize(2);
      for (auto& p : setup) p.algorithm = algs[k % 4 == 3 ? rng.below(4) : 0];
    } else {
      const std::size_t n = 2 + rng.below(2);
      std::vector<std::size_t> counts(n);
      for (auto& m : counts) m = 2 + rng.below(3);
      games.emplace_back(GeneralSumGame::random(counts, rng()));
      setup.resize(n);
      for (auto& p : setup) p.algorithm = Algorithm::kSwapLogBarrier;
    }
    for (auto& p : setup) p.adversary = random_adversary(rng, horizon, 0.3);
    // Make sure every run is actually corrupted.
    if (setup[0].adversary.strategy_budget == 0.0) setup[0].adversary.strategy_budget = 5.0;
    if (setup[0].adversary.utility_budget == 0.0) setup[0].adversary.utility_budget = 5.0;
    runs.push_back(run_game(games.back(), setup, horizon, rng()));
  }
  return runs;
}

SuiteReport suite_regret_relations(const VerifyOptions& opt, RunAuditor* audit) {
  SuiteReport rep;
  const auto start = Clock::now();
  std::vector<GameModel> games;
  const std::vector<RunResult> runs = relation_corpus(opt, games);
  std::size_t checks = 0, failures = 0, over_budget = 0;
  double worst_margin = 1e300;
  std::string first;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    audit->add(runs[r], games[r]);
    for (std::size_t i = 0; i < runs[r].players.size(); ++i) {
      const PlayerLedger& l = runs[r].ledger.players[i];
      if (l.strategy_spent > l.strategy_budget + 1e-9 ||
          l.utility_spent > l.utility_budget + 1e-9) {
        ++over_budget;
      }
      for (const RelationCheck& c : regret_relations(runs[r].players[i], l)) {
        ++checks;
        worst_margin = std::min(worst_margin, c.bound - c.difference);
        if (!c.ok) {
          if (failures++ == 0) {
            first = "run " + std::to_string(r) + " player " + std::to_string(i) +
                    ": " + c.name;
          }
        }
      }
    }
  }
  rep.checks.push_back(check(4, "eight regret relations on 50 corrupted runs",
                             failures == 0,
                             std::to_string(checks) + " inequalities, smallest margin " +
                                 fmt(worst_margin) + (failures ? ", first failure " + first : "")));
  rep.checks.push_back(check(4, "ledger spend within budget", over_budget == 0,
                             std::to_string(over_budget) + " players over budget"));
  rep.checks.push_back(runtime_check(4, seconds_since(start), 120.0));
  return rep;
}

SuiteReport suite_lower_bound_ii(const VerifyOptions& opt, RunAuditor* audit) {
  SuiteReport rep;
  const auto start = Clock::now();
  const std::size_t horizon = 1000;
  bool ok = true;
  std::string detail;
  for (double c : {10.0, 100.0, 1000.0}) {
    for (std::size_t mx : {2, 5}) {
      const LowerBoundInstance inst = lower_bound_ii(mx, c, 3);
      PlayerSetup x{Algorithm::kEntropyOftrl, std::nullopt, inst.x_adversary};
      PlayerSetup y{Algorithm::kEntropyOftrl, std::nullopt, inst.y_adversary};
      const RunResult run = run_zero_sum(inst.game, x, y, horizon, opt.seed);
      audit->add(run, GameModel(inst.game));
      const double reg = external_regret(run.players[0], PlaySource::kPlayed,
                                         UtilitySource::kTrue);
      const bool pass = reg >= c / 2.0 - 1e-9 &&
                        run.ledger.players[0].strategy_spent <= c + 1e-9;
      ok = ok && pass;
      detail += "C=" + fmt(c) + ",m=" + std::to_string(mx) + ": " + fmt(reg) +
                (pass ? "" : " (FAIL)") + "; ";
    }
  }
  rep.checks.push_back(check(6, "Reg_{x,g} >= C/2 against entropy OFTRL", ok, detail));
  rep.checks.push_back(runtime_check(6, seconds_since(start), 30.0));
  return rep;
}

double mean_abs_rademacher(std::uint64_t seed, std::size_t seeds, std::size_t length) {
  double total = 0.0;
  for (std::size_t s = 0; s < seeds; ++s) {
    int sum = 0;
    for (int v : rademacher_signs(mix64(seed + s), length)) sum += v;
    total += std::abs(sum);
  }
  return total / static_cast<double>(seeds);
}

SuiteReport suite_lower_bound_i(const VerifyOptions& opt, RunAuditor* audit) {
  SuiteReport rep;
  const auto start = Clock::now();
  const std::size_t horizon = 1000;
  std::map<double, double> mean;
  for (double c : {400.0, 1600.0}) {
    double total = 0.0;
    for (std::uint64_t s = 1; s <= 100; ++s) {
      const LowerBoundInstance inst = lower_bound_i(4, c, mix64(opt.seed * 1000 + s));
      PlayerSetup x{Algorithm::kEntropyOftrl, std::nullopt, inst.x_adversary};
      PlayerSetup y{Algorithm::kEntropyOftrl, std::nullopt, inst.y_adversary};
      const RunResult run = run_zero_sum(inst.game, x, y, horizon, s);
      audit->add(run, GameModel(inst.game));
      total += external_regret(run.players[0], PlaySource::kPlayed,
                               UtilitySource::kObserved);
    }
    mean[c] = total / 100.0;
  }
  const double ratio = mean[1600.0] / mean[400.0];
  rep.checks.push_back(check(7, "mean Reg_{x,g~} ratio C=1600 vs C=400 in [1.6, 2.4]",
                             ratio >= 1.6 && ratio <= 2.4,
                             "means " + fmt(mean[400.0]) + ", " + fmt(mean[1600.0]) +
                                 ", ratio " + fmt(ratio)));
  // Monte-Carlo oracle for the Khintchine floor: mean |S_100| over 10^4 seeds.
  const double mc = mean_abs_rademacher(opt.seed, 10000, 100);
  rep.checks.push_back(check(7, "Monte-Carlo oracle mean |sum of 100 signs| >= 0.95 sqrt(50)",
                             mc >= 0.95 * std::sqrt(50.0), "mean " + fmt(mc)));
  bool floor_ok = true;
  std::string detail;
  for (const auto& [c, m] : mean) {
    const double active = std::floor(c / 2.0);
    const double floor_value = 0.95 * std::sqrt(active / 2.0);
    floor_ok = floor_ok && m > floor_value;
    detail += "C=" + fmt(c) + ": " + fmt(m) + " vs " + fmt(floor_value) + "; ";
  }
  rep.checks.push_back(check(7, "mean regret above 0.95 sqrt(K/2), K = C/2 active rounds",
                             floor_ok, detail));
  rep.checks.push_back(runtime_check(7, seconds_since(start), 60.0));
  return rep;
}

SuiteReport suite_lower_bound_iii(const VerifyOptions& opt, RunAuditor* audit) {
  SuiteReport rep;
  const auto start = Clock::now();
  const std::size_t horizon = 1000;
  const double kappa = 1.0 / 12.0;
  bool ok = true, feasible = true;
  std::string detail;
  for (double c : {16.0, 64.0, 256.0}) {
    double worst = 1e300;
    for (std::uint64_t s = 1; s <= 20; ++s) {
      const LowerBoundInstance inst = lower_bound_iii(c, mix64(opt.seed * 7919 + s));
      PlayerSetup x{Algorithm::kEntropyOftrl, std::nullopt, inst.x_adversary};
      PlayerSetup y{Algorithm::kEntropyOftrl, std::nullopt, inst.y_adversary};
      const RunResult run = run_zero_sum(inst.game, x, y, horizon, s);
      audit->add(run, GameModel(inst.game));
      const auto& ytrace = run.players[1];
      for (std::size_t t = 0; t < inst.active_rounds && t < horizon; ++t) {
        const auto& g = run.players[0].rounds[t].true_utility;
        if (std::abs(std::abs(g[0]) - kLowerIIIScale) > 1e-12 ||
            std::abs(g[0] + g[1]) > 1e-12) {
          feasible = false;
        }
      }
      const double rx = external_regret(run.players[0], PlaySource::kSuggested,
                                        UtilitySource::kTrue);
      const double ry = external_regret(ytrace, PlaySource::kSuggested,
                                        UtilitySource::kTrue);
      worst = std::min(worst, std::max(rx, ry));
    }
    const double bound = kappa * std::sqrt(c);
    ok = ok && worst >= bound;
    detail += "C=" + fmt(c) + ": min over seeds " + fmt(worst) + " vs " + fmt(bound) + "; ";
  }
  rep.checks.push_back(check(0, "forced column play realizes A y = (s/3)(1, -1)", feasible,
                             feasible ? "all forced rounds exact" : "mismatch"));
  rep.checks.push_back(check(0, "max(Reg_{xhat,g}, Reg_{yhat,l}) >= sqrt(C)/12 on 20 seeds",
                             ok, detail));
  rep.checks.push_back(runtime_check(0, seconds_since(start), 60.0));
  return rep;
}

SuiteReport suite_honest_flatness(const VerifyOptions& opt, RunAuditor* audit) {
  SuiteReport rep;
  const auto start = Clock::now();
  const std::size_t horizon = 10000, early = 1000;
  std::size_t flat = 0, wins = 0;
  double worst_ratio = 0.0;
  std::string detail;
  for (std::size_t g = 0; g < 20; ++g) {
    const ZeroSumGame game = ZeroSumGame::random(10, 10, mix64(opt.seed * 31 + g));
    PlayerSetup oftrl{Algorithm::kEntropyOftrl, std::nullopt, {}};
    PlayerSetup hedge{Algorithm::kHedge, std::nullopt, {}};
    const RunResult a = run_zero_sum(game, oftrl, oftrl, horizon, g);
    const RunResult b = run_zero_sum(game, hedge, hedge, horizon, g);
    audit->add(a, GameModel(game));
    audit->add(b, GameModel(game));
    RegretAccumulator acc(10);
    double at_early = 0.0;
    for (std::size_t t = 0; t < horizon; ++t) {
      const auto& r = a.players[0].rounds[t];
      acc.add(r.played.entries(), r.true_utility);
      if (t + 1 == early) at_early = acc.external();
    }
    const double at_end = acc.external();
    const double hedge_end =
        external_regret(b.players[0], PlaySource::kPlayed, UtilitySource::kTrue);
    const bool is_flat = at_end <= 2.0 * at_early;
    const double ratio = at_end / at_early;
    worst_ratio = std::max(worst_ratio, ratio);
    flat += is_flat;
    wins += at_end <= hedge_end;
    detail += fmt(at_early, 4) + "->" + fmt(at_end, 4) + " (hedge " + fmt(hedge_end, 4) + "); ";
  }
  rep.checks.push_back(check(8, "Reg_x(1e4) <= 2 Reg_x(1e3) on all 20 games", flat == 20,
                             std::to_string(flat) + "/20, worst ratio " + fmt(worst_ratio)));
  rep.checks.push_back(check(8, "entropy OFTRL <= Hedge final regret on >= 18/20 games",
                             wins >= 18, std::to_string(wins) + "/20"));
  rep.checks.push_back(check(8, "per-game Reg_x at t=1e3 -> t=1e4", true, detail));
  rep.checks.push_back(runtime_check(8, seconds_since(start), 180.0));
  return rep;
}

SuiteReport suite_markov_stability(const VerifyOptions& opt, RunAuditor* audit) {
  SuiteReport rep;
  const auto start = Clock::now();
  const std::size_t horizon = 1000;
  const std::vector<std::pair<std::size_t, std::size_t>> shapes = {
      {2, 2}, {2, 5}, {2, 8}, {3, 2}, {3, 4}, {3, 8},
      {4, 2}, {4, 3}, {4, 5}, {4, 8}, {2, 3}, {3, 6}};
  std::size_t mu_bad = 0, markov_bad = 0, honest_bad = 0, rounds = 0;
  double worst_residual = 0.0, worst_mu = 0.0, worst_move = 0.0;
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    const auto [n, m] = shapes[k];
    const GeneralSumGame game =
        GeneralSumGame::random(std::vector<std::size_t>(n, m), mix64(opt.seed * 131 + k));
    std::vector<PlayerSetup> setup(n);
    for (auto& p : setup) p.algorithm = Algorithm::kSwapLogBarrier;
    const RunResult run = run_general_sum(game, setup, horizon, k);
    audit->add(run, GameModel(game));
    for (const auto& trace : run.players) {
      for (const auto& r : trace.rounds) {
        ++rounds;
        worst_mu = std::max(worst_mu, r.swap->mu_sum);
        worst_move = std::max(worst_move, r.swap->scaled_local_move);
        if (!r.swap->stable) ++mu_bad;
      }
      markov_bad += markov_stability_audit(trace).violations;
      honest_bad += honest_stability_audit(trace).violations;
      worst_residual = std::max(worst_residual, worst_stationarity_residual(trace));
    }
  }
  rep.checks.push_back(check(9, "sum_a mu_a <= 1/2 every round", mu_bad == 0,
                             std::to_string(rounds) + " player-rounds, worst sum " +
                                 fmt(worst_mu)));
  rep.checks.push_back(check(9, "|x_t - x_{t-1}|_1 <= 8 sum mu and squared form <= 64 m sum |dy|^2",
                             markov_bad == 0, std::to_string(markov_bad) + " violations"));
  rep.checks.push_back(check(9, "expert moves in F-local norm sum to <= 1/2",
                             honest_bad == 0, "worst " + fmt(worst_move) + ", " +
                                                  std::to_string(honest_bad) + " violations"));
  rep.checks.push_back(check(9, "stationarity residual <= 1e-8", worst_residual <= 1e-8,
                             "worst " + fmt(worst_residual)));
  rep.checks.push_back(runtime_check(9, seconds_since(start), 120.0));
  return rep;
}

SuiteReport suite_corruption_trend(const VerifyOptions& opt, RunAuditor* audit) {
  SuiteReport rep;
  const auto start = Clock::now();
  const std::size_t horizon = 2000;
  const ZeroSumGame game = ZeroSumGame::random(5, 5, mix64(opt.seed * 977));
  const std::vector<double> budgets = {0.0, 50.0, 200.0, 800.0};
  std::vector<double> mean;
  for (double c : budgets) {
    double total = 0.0;
    for (std::uint64_t s = 1; s <= 10; ++s) {
      PlayerSetup x{Algorithm::kEntropyOftrl, std::nullopt,
                    AdversarySpec{AdversaryKind::kFrontloaded, c, 0.0, mix64(s)}};
      PlayerSetup y{Algorithm::kEntropyOftrl, std::nullopt, {}};
      const RunResult run = run_zero_sum(game, x, y, horizon, s);
      audit->add(run, GameModel(game));
      total += external_regret(run.players[0], PlaySource::kPlayed, UtilitySource::kTrue);
    }
    mean.push_back(total / 10.0);
  }
  bool monotone = true;
  for (std::size_t k = 1; k < mean.size(); ++k) monotone = monotone && mean[k] >= mean[k - 1];
  const double inc_mid = mean[2] - mean[1];
  const double inc_top = mean[3] - mean[2];
  std::string detail;
  for (std::size_t k = 0; k < budgets.size(); ++k) {
    detail += "C=" + fmt(budgets[k]) + ": " + fmt(mean[k]) + "; ";
  }
  rep.checks.push_back(check(12, "mean final Reg_{x,g} nondecreasing in budget", monotone, detail));
  rep.checks.push_back(check(12, "increment 200->800 >= increment 50->200 minus 10%",
                             inc_top >= inc_mid - 0.1 * std::abs(inc_mid),
                             fmt(inc_top) + " vs " + fmt(inc_mid)));
  rep.checks.push_back(runtime_check(12, seconds_since(start), 120.0));
  return rep;
}

// Standalone runs of the ride-along checks use the relation corpus plus the
// honest general-sum runs of the stability suite.
SuiteReport suite_piggyback(const VerifyOptions& opt, int criterion) {
  RunAuditor local;
  suite_regret_relations(opt, &local);
  suite_markov_stability(opt, &local);
  SuiteReport rep;
  for (auto& c : local.checks()) {
    if (c.criterion == criterion) rep.checks.push_back(std::move(c));
  }
  return rep;
}

using SuiteFn = std::function<SuiteReport(const VerifyOptions&, RunAuditor*)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"stationary", suite_stationary},
      {"reduction-identity", suite_reduction_identity},
      {"logbarrier-solver", suite_logbarrier_solver},
      {"regret-relations", suite_regret_relations},
      {"lower-bound-ii", suite_lower_bound_ii},
      {"lower-bound-i", suite_lower_bound_i},
      {"honest-flatness", suite_honest_flatness},
      {"markov-stability", suite_markov_stability},
      {"corruption-trend", suite_corruption_trend},
      {"lower-bound-iii", suite_lower_bound_iii},
  };
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

struct RunAuditor::Tally {
  std::size_t runs = 0;
  std::size_t zero_sum = 0, nash_bad = 0;
  double nash_margin = 1e300;
  std::size_t ce_runs = 0, ce_bad = 0, joint_runs = 0, joint_bad = 0;
  double joint_worst = 0.0;
  std::size_t entropy_lr = 0, entropy_lr_bad = 0;
  std::size_t expert_lr = 0, expert_lr_bad = 0;
  std::size_t entropy_rvu = 0, entropy_rvu_bad = 0;
  double entropy_rvu_margin = 1e300;
  std::size_t lb_rvu = 0, lb_rvu_bad = 0, lb_rvu_gated = 0;
  double lb_rvu_margin = 1e300;
  std::string first_failure;

  void note(const std::string& what) {
    if (first_failure.empty()) first_failure = what;
  }
};

RunAuditor::RunAuditor() : tally_(std::make_unique<Tally>()) {}
RunAuditor::~RunAuditor() = default;

std::size_t RunAuditor::runs() const { return tally_->runs; }

void RunAuditor::add(const RunResult& run, const GameModel& game) {
  Tally& t = *tally_;
  ++t.runs;
  const double T = static_cast<double>(run.horizon);
  if (const auto* zs = std::get_if<ZeroSumGame>(&game)) {
    ++t.zero_sum;
    const double rx = external_regret(run.players[0], PlaySource::kPlayed, UtilitySource::kTrue);
    const double ry = external_regret(run.players[1], PlaySource::kPlayed, UtilitySource::kTrue);
    const SimplexVector xbar = average_play(run.players[0], PlaySource::kPlayed);
    const SimplexVector ybar = average_play(run.players[1], PlaySource::kPlayed);
    const double gap = nash_gap(*zs, xbar.entries(), ybar.entries());
    t.nash_margin = std::min(t.nash_margin, (rx + ry) / T - gap);
    if (!(gap <= (rx + ry) / T + 1e-9)) {
      ++t.nash_bad;
      t.note("nash gap " + fmt(gap) + " > " + fmt((rx + ry) / T));
    }
  }
  ++t.ce_runs;
  const double ce = ce_gap(run);
  double worst_swap = 0.0;
  for (const auto& p : run.players) {
    worst_swap = std::max(worst_swap, swap_regret(p, PlaySource::kPlayed, UtilitySource::kTrue));
  }
  if (!(ce <= worst_swap / T + 1e-9)) {
    ++t.ce_bad;
    t.note("ce gap above max swap regret / T");
  }
  const GeneralSumGame gs = std::holds_alternative<ZeroSumGame>(game)
                                ? GeneralSumGame::from_zero_sum(std::get<ZeroSumGame>(game))
                                : std::get<GeneralSumGame>(game);
  if (static_cast<double>(gs.joint_size()) * T * gs.player_count() <= 5e7) {
    ++t.joint_runs;
    const double joint = ce_gap_joint(gs, run);
    const double diff = std::abs(joint - worst_swap / T);
    t.joint_worst = std::max(t.joint_worst, diff);
    if (!(diff <= 1e-9)) {
      ++t.joint_bad;
      t.note("joint-distribution ce gap differs by " + fmt(diff));
    }
  }

  for (const auto& p : run.players) {
    if (p.algorithm == Algorithm::kEntropyOftrl) {
      ++t.entropy_lr;
      const AuditResult lr = learning_rate_audit(p, run.players.size(), run.horizon);
      if (!lr.ok()) {
        ++t.entropy_lr_bad;
        t.note("entropy rate: " + lr.first_failure);
      }
      ++t.entropy_rvu;
      const AuditResult rvu = entropy_rvu_audit(p);
      t.entropy_rvu_margin = std::min(t.entropy_rvu_margin, rvu.margin);
      if (!rvu.ok()) {
        ++t.entropy_rvu_bad;
        t.note("entropy RVU: " + rvu.first_failure);
      }
    } else if (p.algorithm == Algorithm::kSwapLogBarrier) {
      ++t.expert_lr;
      const AuditResult lr = learning_rate_audit(p, run.players.size(), run.horizon);
      if (!lr.ok()) {
        ++t.expert_lr_bad;
        t.note("expert rate: " + lr.first_failure);
      }
      const AuditResult rvu = logbarrier_rvu_audit(p, run.horizon);
      if (!rvu.applicable || !p.stability_flag) {
        ++t.lb_rvu_gated;
        continue;
      }
      ++t.lb_rvu;
      t.lb_rvu_margin = std::min(t.lb_rvu_margin, rvu.margin);
      if (!rvu.ok()) {
        ++t.lb_rvu_bad;
        t.note("log-barrier RVU: " + rvu.first_failure);
      }
    }
  }
}

std::vector<CheckResult> RunAuditor::checks() const {
  const Tally& t = *tally_;
  std::vector<CheckResult> out;
  const auto n = [](std::size_t v) { return std::to_string(v); };
  out.push_back(check(5, "nash_gap <= (Reg_x + Reg_y)/T on zero-sum runs",
                      t.zero_sum > 0 && t.nash_bad == 0,
                      n(t.zero_sum) + " runs, smallest margin " + fmt(t.nash_margin) +
                          ", " + n(t.nash_bad) + " violations"));
  out.push_back(check(5, "ce_gap <= max_i SwapReg_i / T on all runs",
                      t.ce_runs > 0 && t.ce_bad == 0,
                      n(t.ce_runs) + " runs, " + n(t.ce_bad) + " violations"));
  out.push_back(check(5, "ce_gap from the joint distribution equals max_i SwapReg_i / T",
                      t.joint_runs > 0 && t.joint_bad == 0,
                      n(t.joint_runs) + " runs, worst |diff| " + fmt(t.joint_worst)));
  out.push_back(check(10, "entropy rates: cap 1/sqrt(2), nonincreasing",
                      t.entropy_lr > 0 && t.entropy_lr_bad == 0,
                      n(t.entropy_lr) + " traces, " + n(t.entropy_lr_bad) + " failing"));
  out.push_back(check(10, "expert rates: cap 1/(256 n sqrt(m)), nonincreasing, increment bound",
                      t.expert_lr > 0 && t.expert_lr_bad == 0,
                      n(t.expert_lr) + " traces, " + n(t.expert_lr_bad) + " failing"));
  out.push_back(check(11, "entropy OFTRL RVU bound",
                      t.entropy_rvu > 0 && t.entropy_rvu_bad == 0,
                      n(t.entropy_rvu) + " traces, smallest margin " +
                          fmt(t.entropy_rvu_margin) + ", " + n(t.entropy_rvu_bad) + " failing"));
  out.push_back(check(11, "log-barrier RVU bound per expert (stable runs)",
                      t.lb_rvu > 0 && t.lb_rvu_bad == 0,
                      n(t.lb_rvu) + " traces audited, " + n(t.lb_rvu_gated) +
                          " gated out, smallest margin " + fmt(t.lb_rvu_margin) + ", " +
                          n(t.lb_rvu_bad) + " failing"));
  if (!t.first_failure.empty()) {
    out.back().detail += "; first failure: " + t.first_failure;
  }
  return out;
}

bool SuiteReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  for (const char* extra : {"equilibrium", "learning-rates", "rvu-audits",
                            "lower-bounds", "all"}) {
    names.emplace_back(extra);
  }
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& options,
                      RunAuditor* shared) {
  const auto start = Clock::now();
  SuiteReport rep;
  const auto run_many = [&](const std::vector<std::string>& names) {
    RunAuditor local;
    RunAuditor* audit = shared ? shared : &local;
    for (const auto& n : names) {
      for (const auto& [key, fn] : registry()) {
        if (key == n) {
          SuiteReport part = fn(options, audit);
          for (auto& c : part.checks) {
            c.name = n + ": " + c.name;
            rep.checks.push_back(std::move(c));
          }
        }
      }
    }
    if (!shared && names.size() > 1 && name == "all") {
      for (auto& c : local.checks()) rep.checks.push_back(std::move(c));
    }
  };

  if (name == "equilibrium") {
    rep = suite_piggyback(options, 5);
  } else if (name == "learning-rates") {
    rep = suite_piggyback(options, 10);
  } else if (name == "rvu-audits") {
    rep = suite_piggyback(options, 11);
  } else if (name == "lower-bounds") {
    run_many({"lower-bound-i", "lower-bound-ii", "lower-bound-iii"});
  } else if (name == "all") {
    std::vector<std::string> names;
    for (const auto& [key, fn] : registry()) names.push_back(key);
    run_many(names);
  } else {
    bool found = false;
    for (const auto& [key, fn] : registry()) {
      if (key == name) {
        RunAuditor local;
        rep = fn(options, shared ? shared : &local);
        found = true;
      }
    }
    if (!found) fail(ErrorCode::kInvalidArgument, "unknown suite '" + name + "'");
  }
  rep.suite = name;
  rep.seconds = seconds_since(start);
  return rep;
}

std::string suite_text(const SuiteReport& report) {
  std::string out;
  for (const auto& c : report.checks) {
    out += std::string(c.passed ? "PASS" : "FAIL") + "  ";
    if (c.criterion > 0) out += "[" + std::to_string(c.criterion) + "] ";
    out += c.name + "  (" + c.detail + ")\n";
  }
  out += "suite " + report.suite + ": " + (report.passed() ? "PASS" : "FAIL") +
         " in " + fmt(report.seconds, 3) + " s\n";
  return out;
}

std::string suite_json(const SuiteReport& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["passed"] = report.passed();
  j["seconds"] = report.seconds;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"criterion", c.criterion},
                      {"name", c.name},
                      {"passed", c.passed},
                      {"detail", c.detail}});
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

}  // namespace cld
