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

#include "stablenash/embedding.h"
#include "stablenash/errors.h"
#include "stablenash/exact_nash.h"
#include "stablenash/generators.h"
#include "stablenash/random.h"
#include "stablenash/stability.h"
#include "stablenash/support_search.h"

namespace stablenash {
namespace {

constexpr double kEps = 0.0002;  // scale 0.2

TEST_CASE("scale from eps") {
  CHECK(EmbeddingDelta(kEps) == doctest::Approx(0.2));
  CHECK(EmbeddingDelta(0.1 * 0.1 * 0.1 * 0.1 / 8) == doctest::Approx(0.1));
}

TEST_CASE("embedded entries") {
  const auto src = RandomGame(3, 3, 4);
  const auto emb = Embed(src, kEps);
  REQUIRE(emb.game.rows() == 4);
  CHECK(emb.source_shape == 3);
  CHECK(emb.delta == doctest::Approx(0.2));
  CHECK_FALSE(emb.within_proven_range);
  const Matrix& r = emb.game.row_payoffs();
  const Matrix& c = emb.game.col_payoffs();
  CHECK(r(3, 3) == doctest::Approx(0.4));
  CHECK(c(3, 3) == 0.0);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(r(i, 3) == 0.0);
    CHECK(r(3, i) == 0.0);
    CHECK(c(i, 3) == 1.0);
    CHECK(c(3, i) == doctest::Approx(0.4));
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(r(i, j) == doctest::Approx(0.9 + 0.1 * src.row_payoffs()(i, j)));
      CHECK(c(i, j) == doctest::Approx(0.1 + 0.1 * src.col_payoffs()(i, j)));
    }
  }
  const auto recovered = RecoverSource(emb);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(recovered.row_payoffs()(i, j) == doctest::Approx(src.row_payoffs()(i, j)));
      CHECK(recovered.col_payoffs()(i, j) == doctest::Approx(src.col_payoffs()(i, j)));
    }
  CHECK(Embed(src, 1e-5).within_proven_range);
}

TEST_CASE("embedding input checks") {
  CHECK_THROWS_AS(Embed(RandomGame(2, 3, 1), kEps), ShapeError);
  CHECK_THROWS_AS(Embed(RandomGame(2, 2, 1), 0.0), ParameterError);
  CHECK_THROWS_AS(Embed(RandomGame(2, 2, 1), 0.01), ParameterError);  // scale above 0.5
  CHECK_THROWS_AS(Embed(PublicGoods(3), kEps), ParameterError);       // negative entries
}

TEST_CASE("mass bounds") {
  const auto exact = ExactEquilibriumMassBounds(0.1);
  CHECK(exact.lo == doctest::Approx(0.2 / 1.2));
  CHECK(exact.hi == doctest::Approx(0.2 / 1.1));
  const auto approx = ApproximateEquilibriumMassBounds(0.1);
  CHECK(approx.lo == doctest::Approx(0.05));
  CHECK(approx.hi == doctest::Approx(0.4));
  CHECK(LeadingMass(MixedStrategy({0.1, 0.2, 0.7}), 2) == doctest::Approx(0.3));
}

TEST_CASE("concentration game construction") {
  const auto g = ConcentrationGame(2, 0.1);
  CHECK(g.row_payoffs()(0, 0) == 1.0);
  CHECK(g.row_payoffs()(2, 2) == doctest::Approx(0.2));
  CHECK(g.col_payoffs()(0, 2) == 1.0);
  CHECK(g.col_payoffs()(2, 1) == doctest::Approx(0.2));
  CHECK_THROWS_AS(ConcentrationGame(2, 0.2), ParameterError);
  CHECK_THROWS_AS(ConcentrationGame(2, 0.1, Matrix(2, 2, 0.05), Matrix(2, 2)), ParameterError);
  CHECK_THROWS_AS(ConcentrationGame(2, 0.1, Matrix(2, 2), Matrix(2, 2, 0.2)), ParameterError);
  CHECK_THROWS_AS(ConcentrationGame(2, 0.1, Matrix(3, 3), Matrix(3, 3)), ShapeError);
}

TEST_CASE("exact equilibria of concentration games carry bounded mass") {
  const double delta = 0.1;
  const auto bounds = ExactEquilibriumMassBounds(delta);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = RandomConcentrationGame(3, delta, seed);
    const auto set = EnumerateEquilibria(g);
    REQUIRE_FALSE(set.equilibria.empty());
    for (const auto& e : set.equilibria) {
      CHECK(bounds.Contains(LeadingMass(e.row, 3), 1e-6));
      CHECK(bounds.Contains(LeadingMass(e.col, 3), 1e-6));
    }
  }
  // Unshifted: the matching-pennies-like core gives the lower end exactly.
  const auto set = EnumerateEquilibria(ConcentrationGame(1, delta));
  REQUIRE(set.equilibria.size() == 1);
  CHECK(LeadingMass(set.equilibria[0].row, 1) == doctest::Approx(bounds.lo));
}

TEST_CASE("approximate equilibria of concentration games carry bounded mass") {
  const double delta = 0.1;
  const auto bounds = ApproximateEquilibriumMassBounds(delta);
  const auto g = RandomConcentrationGame(3, delta, 17);
  const auto eqs = EnumerateEquilibria(g).equilibria;
  const auto samples = SampleApproximateEquilibria(g, eqs, delta * delta,
                                                   ApproximationKind::kPlain, 200, 5);
  CHECK(samples.size() == 200);
  for (const auto& s : samples) {
    CHECK(bounds.Contains(LeadingMass(s.row, 3), 1e-9));
    CHECK(bounds.Contains(LeadingMass(s.col, 3), 1e-9));
  }
}

TEST_CASE("extraction round trip") {
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    const auto src = RandomGame(3, 3, rng.Next());
    const auto emb = Embed(src, kEps);
    const double target = std::pow(emb.delta, 4) / 8;
    const auto found = FindWellSupported(emb.game, target, 4);
    REQUIRE(found.has_value());
    const auto ext = Extract(emb, found->profile);
    CHECK(ext.source_regrets.max_regret() <= emb.delta + 1e-6);
    CHECK(ext.profile.row.size() == 3);
    CHECK(ApproximateEquilibriumMassBounds(emb.delta).Contains(ext.row_mass, 1e-9));
  }
}

TEST_CASE("extraction rejects profiles that are not approximate equilibria") {
  const auto emb = Embed(MatchingPennies(), kEps);
  const StrategyProfile pure{MixedStrategy::Pure(3, 0), MixedStrategy::Pure(3, 0)};
  CHECK_THROWS_AS(Extract(emb, pure), CertificateError);
  const StrategyProfile wrong{MixedStrategy::Pure(2, 0), MixedStrategy::Pure(2, 0)};
  CHECK_THROWS_AS(Extract(emb, wrong), ShapeError);
}

}  // namespace
}  // namespace stablenash
