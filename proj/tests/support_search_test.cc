// Copyright 2026 The stablenash Authors
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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "stablenash/embedding.h"
#include "stablenash/errors.h"
#include "stablenash/exact_nash.h"
#include "stablenash/generators.h"
#include "stablenash/random.h"
#include "stablenash/support_search.h"
#include "support/oracles.h"

namespace stablenash {
namespace {

StrategyProfile Profile(std::vector<double> p, std::vector<double> q) {
  return {MixedStrategy(std::move(p)), MixedStrategy(std::move(q))};
}

TEST_CASE("feasibility on fixed supports") {
  const auto mp = MatchingPennies();
  CHECK_FALSE(WellSupportedFeasible(mp, {0}, {0}, 0.5).has_value());
  CHECK(WellSupportedFeasible(mp, {0}, {0}, 1.0).has_value());
  const auto mixed = WellSupportedFeasible(mp, {0, 1}, {0, 1}, 0.0);
  REQUIRE(mixed.has_value());
  CHECK(ProfileDistance(*mixed, Profile({0.5, 0.5}, {0.5, 0.5})) <= 1e-8);

  CHECK_THROWS_AS(WellSupportedFeasible(mp, {}, {0}, 0.1), DomainError);
  CHECK_THROWS_AS(WellSupportedFeasible(mp, {0}, {2}, 0.1), ShapeError);
  CHECK_THROWS_AS(WellSupportedFeasible(mp, {0}, {0}, -0.1), ParameterError);
}

TEST_CASE("feasibility on a separating game and a meeting pair") {
  const auto sep = SeparatingGame(0.1);
  CHECK_FALSE(WellSupportedFeasible(sep, {0, 1}, {0, 1}, 0.05).has_value());
  CHECK(WellSupportedFeasible(sep, {0, 1}, {0, 1}, 0.2).has_value());

  const auto meet = MeetingGame(3);
  const auto half = WellSupportedFeasible(meet, {1, 2}, {1, 2}, 0.0);
  REQUIRE(half.has_value());
  CHECK(ProfileDistance(*half, Profile({0, 0.5, 0.5}, {0, 0.5, 0.5})) <= 1e-8);
}

TEST_CASE("feasibility is monotone in eps") {
  Rng rng(41);
  for (int t = 0; t < 60; ++t) {
    const auto game = RandomGame(3, 3, rng.Next());
    const std::vector<std::size_t> rs = {0, 1}, cs = {1, 2};
    bool seen = false;
    for (double eps = 0.0; eps <= 1.0; eps += 0.05) {
      const bool ok = WellSupportedFeasible(game, rs, cs, eps).has_value();
      if (seen) CHECK(ok);
      seen = seen || ok;
    }
  }
}

TEST_CASE("exact search succeeds wherever an equilibrium exists") {
  Rng rng(42);
  for (int t = 0; t < 40; ++t) {
    const auto game = RandomGame(4, 4, rng.Next());
    const auto res = FindWellSupported(game, 0.0, 4);
    REQUIRE(res.has_value());
    CHECK(res->regrets.max_ws_gap() <= Tolerances{}.eq);
  }
  const auto meet = FindWellSupported(MeetingGame(4), 0.0, 4);
  REQUIRE(meet.has_value());
  CHECK(meet->row_support.size() == 1);
  CHECK(meet->col_support.size() == 1);
}

TEST_CASE("smallest supports on matching pennies") {
  const auto mp = MatchingPennies();
  const auto tight = FindWellSupported(mp, 0.1, 2);
  REQUIRE(tight.has_value());
  CHECK(tight->row_support.size() == 2);
  CHECK(tight->col_support.size() == 2);
  CHECK(tight->regrets.max_ws_gap() <= 0.1 + 1e-7);

  const auto loose = FindWellSupported(mp, 1.0, 2);
  REQUIRE(loose.has_value());
  CHECK(loose->row_support.size() == 1);
  CHECK(loose->col_support.size() == 1);
  CHECK(loose->supports_tried == 1);

  CHECK_FALSE(FindWellSupported(mp, 0.1, 1).has_value());
  CHECK_THROWS_AS(FindWellSupported(mp, 0.1, 2, 3), ResourceError);
  CHECK_THROWS_AS(FindWellSupported(mp, 0.1, 0), ParameterError);
}

TEST_CASE("no pure result means no pure well-supported profile") {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const auto game = RandomGame(3, 3, rng.Next());
    const double eps = 0.05;
    bool pure_exists = false;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const StrategyProfile s{MixedStrategy::Pure(3, i), MixedStrategy::Pure(3, j)};
        if (testing::NaiveWsGap(game, s) <= eps) pure_exists = true;
      }
    CHECK(FindWellSupported(game, eps, 1).has_value() == pure_exists);
  }
}

TEST_CASE("search results are well-supported") {
  Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    const auto game = RandomGame(4, 4, rng.Next());
    const auto found = FindWellSupported(game, 0.02, 4);
    REQUIRE(found.has_value());  // an exact equilibrium always exists
    CHECK(testing::NaiveWsGap(game, found->profile) <= 0.02 + 1e-7);
    const auto rs = found->profile.row.Support();
    const auto cs = found->profile.col.Support();
    CHECK(std::includes(found->row_support.begin(), found->row_support.end(), rs.begin(), rs.end()));
    CHECK(std::includes(found->col_support.begin(), found->col_support.end(), cs.begin(), cs.end()));
  }
}

TEST_CASE("structured games admit tiny supports") {
  const auto meet = FindWellSupported(MeetingGame(8), 0.1, 2);
  REQUIRE(meet.has_value());
  CHECK(std::max(meet->row_support.size(), meet->col_support.size()) <= 2);
  const auto conc = FindWellSupported(ConcentrationGame(3, 0.1), 0.1, 2);
  REQUIRE(conc.has_value());
  CHECK(std::max(conc->row_support.size(), conc->col_support.size()) <= 2);
}

TEST_CASE("heavy-light split: spread light part") {
  const MixedStrategy p({0.4, 0.3, 0.2, 0.1});
  const auto split = HeavyLightPartition(p, 2.0, 0.001);
  // The largest entry 0.4 is already within Pr[light] / S = 0.5.
  CHECK(split.heavy.empty());
  CHECK(split.light == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(split.rule == SplitRule::kLightIsSpread);
  CHECK(split.light_threshold == doctest::Approx(0.5));
}

TEST_CASE("heavy-light split: one heavy action") {
  const MixedStrategy p({0.05, 0.9, 0.05});
  const auto split = HeavyLightPartition(p, 2.0, 0.01);
  CHECK(split.heavy == std::vector<std::size_t>{1});
  CHECK(split.light == std::vector<std::size_t>{0, 2});
  CHECK(split.rule == SplitRule::kLightIsSpread);
  CHECK(split.heavy_mass == doctest::Approx(0.9));
}

TEST_CASE("heavy-light split: heavy part dominates") {
  const MixedStrategy p({0.97, 0.02, 0.01});
  const auto split = HeavyLightPartition(p, 100.0, 0.01);
  CHECK(split.rule == SplitRule::kHeavyDominates);
  CHECK(split.heavy == std::vector<std::size_t>{0});
  CHECK(split.heavy_mass >= 1.0 - 0.08);

  CHECK_THROWS_AS(HeavyLightPartition(p, 2.0, 0.2), ParameterError);
  CHECK_THROWS_AS(HeavyLightPartition(p, 0.0, 0.01), ParameterError);
}

TEST_CASE("heavy-light split: uniform and concentrated inputs") {
  const auto uniform = HeavyLightPartition(MixedStrategy({0.25, 0.25, 0.25, 0.25}), 2.0, 0.01);
  CHECK(uniform.heavy.empty());
  CHECK(uniform.rule == SplitRule::kLightIsSpread);

  const auto peaked = HeavyLightPartition(MixedStrategy({0.95, 0.05}), 2.0, 0.01);
  CHECK(peaked.heavy == std::vector<std::size_t>{0});
  CHECK(peaked.rule == SplitRule::kHeavyDominates);
}

TEST_CASE("heavy-light split invariants") {
  Rng rng(4);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng.Below(10);
    std::vector<double> w(n);
    double sum = 0;
    for (auto& v : w) sum += (v = std::pow(rng.Exponential(), 3.0));
    for (auto& v : w) v /= sum;
    const MixedStrategy p(w);
    const double s = 1.0 + 20.0 * rng.Unit();
    const double delta = 0.001 + 0.12 * rng.Unit();
    const auto split = HeavyLightPartition(p, s, delta);
    CHECK(split.heavy.size() + split.light.size() == p.Support().size());
    CHECK(split.heavy_mass + split.light_mass == doctest::Approx(1.0));
    double min_heavy = 1.0, max_light = 0.0;
    for (auto i : split.heavy) min_heavy = std::min(min_heavy, p[i]);
    for (auto i : split.light) max_light = std::max(max_light, p[i]);
    if (!split.heavy.empty() && !split.light.empty()) CHECK(min_heavy >= max_light);
    if (split.rule == SplitRule::kLightIsSpread) {
      CHECK(max_light <= split.light_mass / s + 1e-9);
    } else {
      CHECK(split.heavy_mass >= 1.0 - 8.0 * delta - 1e-9);
    }
  }
}

TEST_CASE("sampled strategies are unbiased") {
  const MixedStrategy p({0.5, 0.25, 0.15, 0.1, 0.0});
  std::vector<double> mean(5, 0.0);
  const int runs = 4000;
  for (int r = 0; r < runs; ++r) {
    const auto x = EmpiricalSample(p, 7, 1000 + r);
    for (std::size_t i = 0; i < 5; ++i) {
      mean[i] += x[i] / runs;
      // Every coordinate is a multiple of 1/k.
      CHECK(std::abs(x[i] * 7 - std::round(x[i] * 7)) <= 1e-12);
    }
    CHECK(x[4] == 0.0);
  }
  for (std::size_t i = 0; i < 5; ++i) CHECK(mean[i] == doctest::Approx(p[i]).epsilon(0.02));
  CHECK(EmpiricalSample(p, 9, 3) == EmpiricalSample(p, 9, 3));
  CHECK_THROWS_AS(EmpiricalSample(p, 0, 1), ParameterError);
}

TEST_CASE("sampling a point mass returns it") {
  const auto point = MixedStrategy::Pure(4, 3);
  for (std::size_t k : {1u, 5u, 60u}) CHECK(EmpiricalSample(point, k, k) == point);
}

TEST_CASE("sampled column payoffs concentrate") {
  const auto mp = MatchingPennies();
  const MixedStrategy p({0.5, 0.5});
  int good = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto x = EmpiricalSample(p, 200, seed);
    double worst = 0.0;
    for (std::size_t j = 0; j < 2; ++j) {
      double exact = 0.0, sampled = 0.0;
      for (std::size_t i = 0; i < 2; ++i) {
        exact += p[i] * mp.col_payoffs()(i, j);
        sampled += x[i] * mp.col_payoffs()(i, j);
      }
      worst = std::max(worst, std::abs(exact - sampled));
    }
    if (worst <= 0.15) ++good;
  }
  CHECK(good >= 95);
}

TEST_CASE("support size bound") {
  CHECK(SupportSizeBound(1.0, 0.1, 0.1, 1) == 1.0);
  CHECK(SupportSizeBound(2.0, 0.2, 0.1, 10) == doctest::Approx(8.0 * std::log(10.0)));
  CHECK_THROWS_AS(SupportSizeBound(1.0, 0.0, 0.1, 3), ParameterError);
}

TEST_CASE("compression keeps the heavy part and stays close in payoff") {
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    const auto game = RandomGame(5, 5, rng.Next());
    const auto set = EnumerateEquilibria(game);
    for (const auto& eq : set.equilibria) {
      const auto res = SmallSupportApproximation(game, eq, 0.1, 0.1, rng.Next(), 400.0);
      CHECK(res.sample_size == static_cast<std::size_t>(std::ceil(res.support_bound)));
      for (auto i : res.row_split.heavy) CHECK(res.profile.row[i] == doctest::Approx(eq.row[i]));
      for (auto j : res.col_split.heavy) CHECK(res.profile.col[j] == doctest::Approx(eq.col[j]));
      CHECK(res.profile.row.Support().size() <= res.row_split.heavy.size() + res.sample_size);
      // Hoeffding with k = 400 ln 5 draws keeps payoff error well inside 0.2.
      CHECK(res.regrets.max_regret() <= 0.2);
    }
  }
}

TEST_CASE("compression of 10x10 equilibria at the largest delta") {
  Rng rng(77);
  int checked = 0;
  for (int t = 0; t < 20; ++t) {
    const auto game = RandomGame(10, 10, rng.Next());
    const auto found = FindWellSupported(game, 0.0, 3);
    if (!found) continue;
    const StrategyProfile eq = found->profile;
    const double delta = 0.125;
    const auto res = SmallSupportApproximation(game, eq, 0.1, delta, rng.Next());
    CHECK(res.profile.row.Support().size() <= res.row_split.heavy.size() + res.sample_size);
    CHECK(res.profile.col.Support().size() <= res.col_split.heavy.size() + res.sample_size);
    CHECK(ProfileDistance(res.profile, eq) <= 8.0 * delta + 0.05);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("compression parameter checks") {
  const auto mp = MatchingPennies();
  const auto eq = Profile({0.5, 0.5}, {0.5, 0.5});
  CHECK_THROWS_AS(SmallSupportApproximation(mp, eq, 0.2, 0.1, 1), ParameterError);
  CHECK_THROWS_AS(SmallSupportApproximation(mp, eq, 0.0, 0.1, 1), ParameterError);
  CHECK_THROWS_AS(SmallSupportApproximation(mp, eq, 0.1, 0.2, 1), ParameterError);
}

TEST_CASE("pure equilibria pass through compression unchanged") {
  const auto game = MeetingGame(4);
  const StrategyProfile pure{MixedStrategy::Pure(4, 2), MixedStrategy::Pure(4, 2)};
  const auto res = SmallSupportApproximation(game, pure, 0.05, 0.1, 1);
  CHECK(res.profile == pure);
  CHECK(res.regrets.max_regret() == 0.0);
}

}  // namespace
}  // namespace stablenash
