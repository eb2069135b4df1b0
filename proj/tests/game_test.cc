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

#include <cmath>
#include <limits>

#include "stablenash/errors.h"
#include "stablenash/game.h"
#include "stablenash/generators.h"
#include "stablenash/random.h"
#include "support/oracles.h"

namespace stablenash {
namespace {

StrategyProfile Profile(std::vector<double> p, std::vector<double> q) {
  return {MixedStrategy(std::move(p)), MixedStrategy(std::move(q))};
}

MixedStrategy RandomStrategy(std::size_t n, Rng& rng, bool sparse) {
  std::vector<double> w(n);
  double sum = 0.0;
  for (auto& v : w) {
    v = (sparse && rng.Coin()) ? 0.0 : rng.Exponential();
    sum += v;
  }
  if (sum == 0.0) {
    w[0] = 1.0;
    sum = 1.0;
  }
  for (auto& v : w) v /= sum;
  return MixedStrategy(w);
}

TEST_CASE("matrix shape checks") {
  CHECK_THROWS_AS(Matrix::FromRows({{1, 2}, {3}}), ShapeError);
  CHECK_THROWS_AS(BimatrixGame(Matrix(2, 2), Matrix(2, 3)), ShapeError);
  CHECK_THROWS_AS(BimatrixGame(Matrix(0, 0), Matrix(0, 0)), ShapeError);
  Matrix bad(1, 1);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(BimatrixGame(bad, Matrix(1, 1)), ValidationError);
}

TEST_CASE("out-of-range entries are reported, not rejected") {
  const BimatrixGame g = PublicGoods(3);
  const auto flagged = g.OutOfRangeEntries();
  CHECK_FALSE(flagged.empty());
  for (const auto& v : flagged) CHECK(v.value < 0.0);
}

TEST_CASE("mixed strategy validation") {
  CHECK_THROWS_AS(MixedStrategy({0.5, 0.4}), ValidationError);
  CHECK_THROWS_AS(MixedStrategy({1.2, -0.2}), ValidationError);
  CHECK_THROWS_AS(MixedStrategy(std::vector<double>{}), ValidationError);
  // Dust below tau_zero is clamped to zero.
  const MixedStrategy s({1.0 + 5e-10, -5e-10});
  CHECK(s[1] == 0.0);
  const MixedStrategy t({0.5, 1e-10, 0.5 - 1e-10});
  CHECK(t.Support() == std::vector<std::size_t>{0, 2});
  const MixedStrategy c = t.Cleaned();
  CHECK(c[1] == 0.0);
  CHECK(c[0] + c[2] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("expected payoffs") {
  const auto mp = MatchingPennies();
  const auto v = ExpectedPayoffs(mp, Profile({0.5, 0.5}, {0.5, 0.5}));
  CHECK(v.row == 0.5);
  CHECK(v.col == 0.5);

  const auto meet = MeetingGame(3);
  const auto home = ExpectedPayoffs(meet, Profile({1, 0, 0}, {1, 0, 0}));
  CHECK(home.row == 0.5);
  CHECK(home.col == 0.5);

  const auto sep = SeparatingGame(0.1);
  CHECK(ExpectedPayoffs(sep, Profile({1, 0}, {0.3, 0.7})).row == 1.0);

  CHECK_THROWS_AS(ExpectedPayoffs(mp, Profile({1, 0, 0}, {1, 0})), ShapeError);
}

TEST_CASE("variation and profile distance") {
  CHECK(VariationDistance(MixedStrategy({1, 0}), MixedStrategy({0, 1})) == 1.0);
  CHECK(VariationDistance(MixedStrategy({0.7, 0.3}), MixedStrategy({0.7, 0.3})) == 0.0);
  CHECK(VariationDistance(MixedStrategy({0.7, 0.3}), MixedStrategy({0.4, 0.6})) ==
        doctest::Approx(0.3).epsilon(1e-12));
  CHECK_THROWS_AS(VariationDistance(MixedStrategy({1, 0}), MixedStrategy({1, 0, 0})),
                  ShapeError);

  const auto a = Profile({0.7, 0.3}, {0.5, 0.5});
  const auto b = Profile({0.4, 0.6}, {0.6, 0.4});
  CHECK(ProfileDistance(a, b) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(ProfileDistance(Profile({1, 0}, {1, 0}), Profile({0, 1}, {1, 0})) == 1.0);
}

TEST_CASE("regrets on the separating game and the meeting game") {
  const auto sep = SeparatingGame(0.1);
  const auto r = ComputeRegrets(sep, Profile({0.5, 0.5}, {0.5, 0.5}));
  CHECK(r.row_regret == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(r.row_ws_gap == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(r.IsEpsilonEquilibrium(0.05 + 1e-12));
  CHECK_FALSE(r.IsWellSupported(0.05));

  const auto meet = MeetingGame(3);
  const auto m = ComputeRegrets(meet, Profile({0, 0.55, 0.45}, {0, 0.55, 0.45}));
  CHECK(m.row_ws_gap == doctest::Approx(0.1).epsilon(1e-12));

  // Exact equilibrium: every field is zero.
  const auto mp = ComputeRegrets(MatchingPennies(), Profile({0.5, 0.5}, {0.5, 0.5}));
  CHECK(mp.max_regret() <= 1e-9);
  CHECK(mp.max_ws_gap() <= 1e-9);
}

TEST_CASE("regrets agree with loop-based recomputation") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng.Below(5);
    const std::size_t cols = 1 + rng.Below(5);
    const auto g = RandomGame(rows, cols, rng.Next());
    const StrategyProfile s{RandomStrategy(rows, rng, true),
                            RandomStrategy(cols, rng, true)};
    const auto rep = ComputeRegrets(g, s);
    CHECK(rep.row_regret == doctest::Approx(testing::NaiveRowRegret(g, s)).epsilon(1e-12));
    CHECK(rep.col_regret == doctest::Approx(testing::NaiveColRegret(g, s)).epsilon(1e-12));
    CHECK(rep.max_ws_gap() == doctest::Approx(testing::NaiveWsGap(g, s)).epsilon(1e-12));
  }
}

TEST_CASE("perturbation predicate") {
  const auto g = MatchingPennies();
  CHECK(IsPerturbationWithin(g, g, 0.0));
  Matrix r = g.row_payoffs();
  r(0, 1) += 0.05;
  const BimatrixGame moved(r, g.col_payoffs());
  CHECK(IsPerturbationWithin(g, moved, 0.05));
  CHECK_FALSE(IsPerturbationWithin(g, moved, 0.01));
}

TEST_CASE("variation distance is a metric") {
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng.Below(6);
    const auto a = RandomStrategy(n, rng, true);
    const auto b = RandomStrategy(n, rng, true);
    const auto c = RandomStrategy(n, rng, true);
    const double ab = VariationDistance(a, b);
    CHECK(ab == VariationDistance(b, a));
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0);
    CHECK(VariationDistance(a, a) == 0.0);
    CHECK(VariationDistance(a, c) <= ab + VariationDistance(b, c) + 1e-12);
  }
}

TEST_CASE("well-supported gap bounds the regret") {
  Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    const auto g = RandomGame(4, 3, rng.Next());
    const StrategyProfile s = StrategyProfile{RandomStrategy(4, rng, true),
                                              RandomStrategy(3, rng, true)}
                                  .Cleaned();
    const auto rep = ComputeRegrets(g, s);
    CHECK(rep.max_regret() <= rep.max_ws_gap() + 1e-9);
  }
}

TEST_CASE("scaling payoffs scales every regret field") {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const auto g = RandomGame(3, 4, rng.Next());
    const double lambda = 0.25 + 3.0 * rng.Unit();
    Matrix r = g.row_payoffs();
    Matrix c = g.col_payoffs();
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        r(i, j) *= lambda;
        c(i, j) *= lambda;
      }
    const BimatrixGame scaled(r, c, {0.0, lambda});
    const StrategyProfile s{RandomStrategy(3, rng, true), RandomStrategy(4, rng, true)};
    const auto a = ComputeRegrets(g, s);
    const auto b = ComputeRegrets(scaled, s);
    CHECK(b.row_regret == doctest::Approx(lambda * a.row_regret).epsilon(1e-9));
    CHECK(b.col_regret == doctest::Approx(lambda * a.col_regret).epsilon(1e-9));
    CHECK(b.row_ws_gap == doctest::Approx(lambda * a.row_ws_gap).epsilon(1e-9));
    CHECK(b.col_ws_gap == doctest::Approx(lambda * a.col_ws_gap).epsilon(1e-9));
  }
}

}  // namespace
}  // namespace stablenash
