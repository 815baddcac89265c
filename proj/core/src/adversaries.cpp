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

#include "cld/adversaries.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "cld/error.hpp"
#include "cld/rng.hpp"

namespace cld {
namespace {

constexpr std::array<std::pair<AdversaryKind, std::string_view>, 8> kNames{{
    {AdversaryKind::kNone, "none"},
    {AdversaryKind::kRademacher, "rademacher"},
    {AdversaryKind::kLowerI, "lower_i"},
    {AdversaryKind::kLowerII, "lower_ii"},
    {AdversaryKind::kLowerIII, "lower_iii"},
    {AdversaryKind::kFrontloaded, "frontloaded"},
    {AdversaryKind::kPeriodic, "periodic"},
    {AdversaryKind::kTargeted, "targeted"},
}};

void check_budget(double budget) {
  if (!std::isfinite(budget) || budget < 0.0) {
    fail(ErrorCode::kInvalidArgument, "budgets must be finite and >= 0");
  }
}

std::size_t half_floor(double budget, std::size_t horizon) {
  return std::min<std::size_t>(static_cast<std::size_t>(std::floor(budget / 2.0)),
                               horizon);
}

// Move toward vertex k, spending at most the allowance in l1.
std::vector<double> toward_vertex(const SimplexVector& x, std::size_t k,
                                  double allowance) {
  std::vector<double> delta(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    delta[j] = (j == k ? 1.0 : 0.0) - x[j];
  }
  const double dist = lp_norm(delta, Norm::kL1);
  if (dist == 0.0 || allowance <= 0.0) return {};
  const double s = std::min(1.0, allowance / dist);
  for (double& d : delta) d *= s;
  return delta;
}

// Clip u + delta into [-1, 1] so feedback stays in the range the regret
// relations assume.
std::vector<double> project_utility(std::span<const double> u,
                                    std::vector<double> delta) {
  for (std::size_t k = 0; k < delta.size(); ++k) {
    delta[k] = std::clamp(u[k] + delta[k], -1.0, 1.0) - u[k];
  }
  return delta;
}

std::size_t argmin_first(std::span<const double> v) {
  return static_cast<std::size_t>(std::min_element(v.begin(), v.end()) -
                                  v.begin());
}

std::size_t argmax_last(std::span<const double> v) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k] >= v[best]) best = k;
  }
  return best;
}

class ScheduledAdversary : public Adversary {
 public:
  ScheduledAdversary(AdversaryKind kind, const AdversarySpec& spec,
                     std::size_t dimension, std::size_t horizon,
                     std::size_t player, std::uint64_t seed)
      : kind_(kind),
        player_(player),
        seed_(seed),
        strategy_(kind == AdversaryKind::kRademacher
                      ? CorruptionSchedule{}
                      : generic_schedule(kind, spec.strategy_budget, horizon,
                                         Channel::kStrategy)),
        utility_(generic_schedule(kind, spec.utility_budget, horizon,
                                  Channel::kUtility)) {
    auto rng = derive_stream(seed_, player_, 0, StreamPurpose::kTarget);
    target_ = static_cast<std::size_t>(rng.below(dimension));
  }

  std::vector<double> strategy_delta(const StrategyContext& c) override {
    const double a = strategy_.at(c.round);
    if (a <= 0.0) return {};
    const std::size_t k = kind_ == AdversaryKind::kTargeted
                              ? argmin_first(c.cumulative_true_utility)
                              : target_;
    return toward_vertex(c.suggested, k, a);
  }

  std::vector<double> utility_delta(const UtilityContext& c) override {
    const double a = utility_.at(c.round);
    if (a <= 0.0) return {};
    const std::size_t m = c.true_utility.size();
    std::vector<double> delta(m, 0.0);
    if (kind_ == AdversaryKind::kTargeted) {
      delta[argmin_first(c.cumulative_true_utility)] += a;
      delta[argmax_last(c.cumulative_true_utility)] -= a;
    } else if (kind_ == AdversaryKind::kRademacher) {
      auto rng = derive_stream(seed_, 0, c.round, StreamPurpose::kRademacher);
      const double s = rng.sign();
      delta[0] = s * a;
      delta[1] = -s * a;
    } else {
      auto rng = derive_stream(seed_, player_, c.round,
                               StreamPurpose::kUtilitySign);
      for (double& d : delta) d = rng.sign() * a;
    }
    return project_utility(c.true_utility, std::move(delta));
  }

 private:
  AdversaryKind kind_;
  std::size_t player_;
  std::uint64_t seed_;
  CorruptionSchedule strategy_;
  CorruptionSchedule utility_;
  std::size_t target_ = 0;
};

// Feedback sigma_t (e_1 - e_2) for the active rounds, whatever the game says.
class LowerIAdversary : public Adversary {
 public:
  LowerIAdversary(double budget, std::size_t horizon, std::uint64_t seed)
      : active_(half_floor(budget, horizon)), seed_(seed) {}

  std::vector<double> utility_delta(const UtilityContext& c) override {
    if (c.round > active_) return {};
    auto rng = derive_stream(seed_, 0, c.round, StreamPurpose::kRademacher);
    const double s = rng.sign();
    std::vector<double> delta(c.true_utility.size());
    for (std::size_t k = 0; k < delta.size(); ++k) {
      const double target = k == 0 ? s : (k == 1 ? -s : 0.0);
      delta[k] = target - c.true_utility[k];
    }
    return delta;
  }

 private:
  std::size_t active_;
  std::uint64_t seed_;
};

// Forces play onto the last action for the active rounds.
class LowerIIAdversary : public Adversary {
 public:
  LowerIIAdversary(double budget, std::size_t horizon)
      : active_(half_floor(budget, horizon)) {}

  std::vector<double> strategy_delta(const StrategyContext& c) override {
    if (c.round > active_) return {};
    return toward_vertex(c.suggested, c.suggested.size() - 1, 2.0);
  }

 private:
  std::size_t active_;
};

// Forces the column player so that the row player's reward is a scaled
// Rademacher sequence.
class LowerIIIAdversary : public Adversary {
 public:
  LowerIIIAdversary(double budget, std::size_t horizon, std::uint64_t seed)
      : active_(half_floor(budget, horizon)), seed_(seed) {}

  std::vector<double> strategy_delta(const StrategyContext& c) override {
    if (c.round > active_) return {};
    auto rng = derive_stream(seed_, 0, c.round, StreamPurpose::kRademacher);
    const double g = kLowerIIIScale * rng.sign();
    const std::vector<double> y = lower_iii_strategy(g, -g);
    std::vector<double> delta(3);
    for (std::size_t k = 0; k < 3; ++k) delta[k] = y[k] - c.suggested[k];
    return delta;
  }

 private:
  std::size_t active_;
  std::uint64_t seed_;
};

}  // namespace

std::string_view to_string(AdversaryKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

AdversaryKind parse_adversary_kind(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  fail(ErrorCode::kConfigError,
       "unknown adversary kind '" + std::string(name) + "'");
}

std::size_t CorruptionSchedule::active_rounds() const {
  return static_cast<std::size_t>(
      std::count_if(allowance.begin(), allowance.end(),
                    [](double a) { return a > 0.0; }));
}

double CorruptionSchedule::total() const {
  double s = 0.0;
  for (double a : allowance) s += a;
  return s;
}

CorruptionSchedule generic_schedule(AdversaryKind kind, double budget,
                                    std::size_t horizon, Channel channel) {
  check_budget(budget);
  CorruptionSchedule out;
  if (budget == 0.0 || horizon == 0) return out;
  switch (kind) {
    case AdversaryKind::kFrontloaded:
    case AdversaryKind::kTargeted:
    case AdversaryKind::kRademacher: {
      const double step = channel == Channel::kStrategy ? 2.0 : 1.0;
      double left = budget;
      while (left > 0.0 && out.allowance.size() < horizon) {
        const double a = std::min(step, left);
        out.allowance.push_back(a);
        left -= a;
      }
      return out;
    }
    case AdversaryKind::kPeriodic:
      // Per-round l1 mass cannot exceed 2, so the spread is capped there.
      out.allowance.assign(
          horizon, std::min(channel == Channel::kStrategy ? 2.0 : budget,
                            budget / static_cast<double>(horizon)));
      return out;
    default:
      fail(ErrorCode::kInvalidArgument,
           "no generic schedule for adversary kind " +
               std::string(to_string(kind)));
  }
}

std::vector<int> rademacher_signs(std::uint64_t seed, std::size_t horizon) {
  std::vector<int> out(horizon);
  for (std::size_t t = 1; t <= horizon; ++t) {
    out[t - 1] = derive_stream(seed, 0, t, StreamPurpose::kRademacher).sign();
  }
  return out;
}

std::vector<std::vector<double>> rademacher_sequence(std::uint64_t seed,
                                                     std::size_t horizon,
                                                     std::size_t dimension) {
  if (dimension < 2) fail(ErrorCode::kInvalidArgument, "need d >= 2");
  std::vector<std::vector<double>> out;
  out.reserve(horizon);
  for (int s : rademacher_signs(seed, horizon)) {
    std::vector<double> v(dimension, 0.0);
    v[0] = s;
    v[1] = -s;
    out.push_back(std::move(v));
  }
  return out;
}

LowerBoundInstance lower_bound_i(std::size_t m, double utility_budget,
                                 std::uint64_t seed) {
  if (m < 2) fail(ErrorCode::kInvalidArgument, "lower_bound_i needs m >= 2");
  check_budget(utility_budget);
  AdversarySpec x{AdversaryKind::kLowerI, 0.0, utility_budget, seed};
  return LowerBoundInstance{ZeroSumGame(Matrix(m, m, 0.0)), x, AdversarySpec{},
                            static_cast<std::size_t>(
                                std::floor(utility_budget / 2.0))};
}

LowerBoundInstance lower_bound_ii(std::size_t m_x, double strategy_budget,
                                  std::size_t m_y) {
  if (m_x < 2 || m_y < 1) {
    fail(ErrorCode::kInvalidArgument, "lower_bound_ii needs m_x >= 2");
  }
  check_budget(strategy_budget);
  Matrix a(m_x, m_y, 1.0);
  for (std::size_t j = 0; j < m_y; ++j) a(m_x - 1, j) = 0.0;
  AdversarySpec x{AdversaryKind::kLowerII, strategy_budget, 0.0, std::nullopt};
  return LowerBoundInstance{ZeroSumGame(std::move(a)), x, AdversarySpec{},
                            static_cast<std::size_t>(
                                std::floor(strategy_budget / 2.0))};
}

LowerBoundInstance lower_bound_iii(double strategy_budget, std::uint64_t seed) {
  check_budget(strategy_budget);
  AdversarySpec y{AdversaryKind::kLowerIII, strategy_budget, 0.0, seed};
  return LowerBoundInstance{
      ZeroSumGame(Matrix::from_rows({{1.0, 0.0, -1.0}, {0.0, 1.0, -1.0}})),
      AdversarySpec{}, y,
      static_cast<std::size_t>(std::floor(strategy_budget / 2.0))};
}

std::vector<double> lower_iii_strategy(double g1, double g2) {
  const double y3 = (1.0 - g1 - g2) / 3.0;
  return {g1 + y3, g2 + y3, y3};
}

std::unique_ptr<Adversary> make_adversary(const AdversarySpec& spec,
                                          std::size_t dimension,
                                          std::size_t horizon,
                                          std::size_t player,
                                          std::uint64_t run_seed) {
  check_budget(spec.strategy_budget);
  check_budget(spec.utility_budget);
  const std::uint64_t seed = spec.seed.value_or(run_seed);
  switch (spec.kind) {
    case AdversaryKind::kNone:
      return std::make_unique<Adversary>();
    case AdversaryKind::kLowerI:
      if (dimension < 2) fail(ErrorCode::kConfigError, "lower_i needs m >= 2");
      return std::make_unique<LowerIAdversary>(spec.utility_budget, horizon,
                                               seed);
    case AdversaryKind::kLowerII:
      return std::make_unique<LowerIIAdversary>(spec.strategy_budget, horizon);
    case AdversaryKind::kLowerIII:
      if (dimension != 3) {
        fail(ErrorCode::kConfigError, "lower_iii acts on a 3-action player");
      }
      return std::make_unique<LowerIIIAdversary>(spec.strategy_budget, horizon,
                                                 seed);
    case AdversaryKind::kRademacher:
      if (dimension < 2) {
        fail(ErrorCode::kConfigError, "rademacher needs m >= 2");
      }
      [[fallthrough]];
    case AdversaryKind::kFrontloaded:
    case AdversaryKind::kPeriodic:
    case AdversaryKind::kTargeted:
      return std::make_unique<ScheduledAdversary>(spec.kind, spec, dimension,
                                                  horizon, player, seed);
  }
  fail(ErrorCode::kConfigError, "unhandled adversary kind");
}

}  // namespace cld
