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

// Embedding of an arbitrary n x n game into an (n+1) x (n+1) game whose
// approximate equilibria are concentrated, and the map back.
//
// The extra action works like one side of a matching-pennies game, so every
// approximate equilibrium of the embedded game puts only a small but
// bounded mass on the original n actions. Rescaling that mass recovers an
// approximate equilibrium of the source game.

#ifndef STABLENASH_EMBEDDING_H_
#define STABLENASH_EMBEDDING_H_

#include <cstddef>

#include "stablenash/game.h"
#include "stablenash/tolerances.h"

namespace stablenash {

// Largest scale accepted by Embed: beyond it entries leave [0, 1].
inline constexpr double kMaxEmbeddingDelta = 0.5;
// Scale up to which the mass-concentration bounds are proven.
inline constexpr double kConcentrationDeltaLimit = 0.1;

// (8 eps)^(1/4).
double EmbeddingDelta(double eps);

struct EmbeddedGame {
  BimatrixGame game;
  double epsilon = 0.0;
  double delta = 0.0;
  std::size_t source_shape = 0;
  // delta <= kConcentrationDeltaLimit.
  bool within_proven_range = false;
};

// With D = EmbeddingDelta(eps):
//   R' = [ (1 - D/2) + (D/2) R   0  ]    C' = [ D/2 + (D/2) C   1 ]
//        [ 0 ... 0               2D ]         [ 2D ... 2D       0 ]
// Throws ShapeError on a non-square game, ParameterError if eps <= 0, if
// D > kMaxEmbeddingDelta, or if the source has entries outside [0, 1].
EmbeddedGame Embed(const BimatrixGame& source, double eps);

struct MassBounds {
  double lo = 0.0;
  double hi = 0.0;
  bool Contains(double mass, double slack = 0.0) const {
    return mass >= lo - slack && mass <= hi + slack;
  }
};

// Range of first-n mass in exact equilibria: [2D/(1+2D), 2D/(1+D)].
MassBounds ExactEquilibriumMassBounds(double delta);
// Range for approximate equilibria: [D/2, 4D].
MassBounds ApproximateEquilibriumMassBounds(double delta);

// Probability a strategy puts on its first n actions.
double LeadingMass(const MixedStrategy& x, std::size_t n);

struct ExtractionResult {
  StrategyProfile profile;
  double row_mass = 0.0;
  double col_mass = 0.0;
  RegretReport embedded_regrets;
  RegretReport source_regrets;
};

// Inverts the affine map on the top-left blocks.
BimatrixGame RecoverSource(const EmbeddedGame& embedded);

// Restricts to the first n actions and renormalizes. Throws
// CertificateError if `profile` is not a D^4/8-equilibrium of the embedded
// game or if either leading mass is outside [D/2, 4D]. Source regrets are
// measured in RecoverSource(embedded).
ExtractionResult Extract(const EmbeddedGame& embedded,
                         const StrategyProfile& profile,
                         const Tolerances& tol = {});

// The (n+1) x (n+1) concentration game with scale `delta`:
//   R = [ 1 + row_shift   0 ]    C = [ col_shift   1 ]
//       [ 0 ... 0        2D ]        [ 2D ... 2D   0 ]
// row_shift entries must lie in [-D, 0] and col_shift entries in [0, D].
// Requires 0 < D <= kConcentrationDeltaLimit.
BimatrixGame ConcentrationGame(std::size_t n, double delta,
                               const Matrix& row_shift, const Matrix& col_shift,
                               const Tolerances& tol = {});
// Unshifted instance.
BimatrixGame ConcentrationGame(std::size_t n, double delta);

}  // namespace stablenash

#endif  // STABLENASH_EMBEDDING_H_
