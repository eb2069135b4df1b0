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

// Empirical stability measurement for general games, plus the explicit
// constructions that move between perturbations, well-supported
// approximate equilibria and small deviations.
//
// Every delta_hat reported here is a lower bound: it is the distance of a
// concrete witness from the equilibrium set.

#ifndef STABLENASH_STABILITY_H_
#define STABLENASH_STABILITY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stablenash/exact_nash.h"
#include "stablenash/game.h"
#include "stablenash/support_search.h"
#include "stablenash/tolerances.h"

namespace stablenash {

enum class StabilityMode { kPerturbation, kApproximation, kWellSupported };

const char* StabilityModeName(StabilityMode mode);

struct StabilityWitness {
  StrategyProfile profile;
  double distance = 0.0;
  // Set in perturbation mode: the game the profile is an equilibrium of.
  std::optional<BimatrixGame> perturbed_game;
  // Where the witness came from, e.g. "battery:R-entry(1,0)+" or "sample:17".
  std::string origin;
};

struct StabilityReport {
  double epsilon = 0.0;
  double delta_hat = 0.0;
  StabilityMode mode = StabilityMode::kPerturbation;
  std::size_t trials = 0;
  std::size_t profiles_examined = 0;
  // Whether the reference equilibrium set of the input game is complete.
  bool reference_complete = false;
  // The first profile attaining delta_hat (empty if nothing was examined).
  std::vector<StabilityWitness> witnesses;
};

struct StabilityOptions {
  EnumerationOptions enumeration;
  // Adds the deterministic single-entry, row, column and shift battery.
  bool use_battery = true;
  // Sign patterns per anchor are enumerated exhaustively up to this many
  // support actions and sampled beyond it.
  std::size_t max_partition_bits = 10;
  // Bisection steps used to pull a sampled profile into the target set.
  std::size_t repair_steps = 40;
};

struct LabeledGame {
  std::string label;
  BimatrixGame game;
};

// Deterministic L-infinity eps-perturbations: +-eps on every single entry,
// every row and every column of R and of C, and on all entries of R and of C.
std::vector<LabeledGame> PerturbationBattery(const BimatrixGame& game,
                                             double eps);

// Entrywise uniform noise in [-eps, eps] on both matrices.
BimatrixGame RandomPerturbation(const BimatrixGame& game, double eps,
                                std::uint64_t seed);

StabilityReport EstimatePerturbationStability(
    const BimatrixGame& game, double eps, std::size_t trials,
    std::uint64_t seed, const StabilityOptions& options = {});

enum class ApproximationKind { kPlain, kWellSupported };

StabilityReport EstimateApproximationStability(
    const BimatrixGame& game, double eps, ApproximationKind kind,
    std::size_t trials, std::uint64_t seed,
    const StabilityOptions& options = {});

// Random (well-supported) eps-equilibria. Each draw is a sparse Dirichlet
// profile pulled toward a random anchor from `anchors` by bisection until it
// qualifies. Well-supported draws are pruned of actions more than eps below
// the best response before the check. Every returned profile is verified.
std::vector<StrategyProfile> SampleApproximateEquilibria(
    const BimatrixGame& game, std::span<const StrategyProfile> anchors,
    double eps, ApproximationKind kind, std::size_t count, std::uint64_t seed,
    const StabilityOptions& options = {});

// Game within eps of `game` (L-infinity) in which `profile` is an exact
// equilibrium. Requires `profile` to be a well-supported 2*eps equilibrium.
BimatrixGame PerturbationWitness(const BimatrixGame& game,
                                 const StrategyProfile& profile, double eps,
                                 const Tolerances& tol = {});

// Moves alpha row-player mass onto the lowest-index supported action, taken
// from the other supported actions starting with the highest index. The
// result stays inside the support and is a well-supported 2*alpha
// equilibrium when payoffs lie in [0, 1].
StrategyProfile InternalDeviation(const BimatrixGame& game,
                                  const StrategyProfile& profile, double alpha,
                                  const Tolerances& tol = {});

inline constexpr std::size_t kSplitRetries = 64;

// Random deviation at distance exactly 3*delta that touches only the light
// actions: a fair coin per light action decides whether it gains or loses
// mass in proportion to its probability. Requires light mass >= 8*delta.
MixedStrategy RandomSplitDeviation(const MixedStrategy& p,
                                   const HeavyLightSplit& split, double delta,
                                   std::uint64_t seed,
                                   const Tolerances& tol = {});

struct ProbeOptions {
  double support_constant = kDefaultSupportConstant;
  std::size_t deviations = 32;
  EnumerationOptions enumeration;
};

struct ProbeEntry {
  std::size_t equilibrium = 0;
  Player player = Player::kRow;
  HeavyLightSplit split;
  // The light part is spread and carries at least 8*delta.
  bool applicable = false;
  std::size_t deviations = 0;
  // Deviations that remain well-supported eps-equilibria.
  std::size_t well_supported = 0;
  double max_distance = 0.0;
};

struct ProbeReport {
  double epsilon = 0.0;
  double delta = 0.0;
  double support_bound = 0.0;
  std::vector<ProbeEntry> entries;
};

// Monte Carlo look at how random light-part deviations of each equilibrium
// behave: how many stay well-supported eps-equilibria and how far from the
// equilibrium set they land.
ProbeReport ConcentrationProbe(const BimatrixGame& game, double eps,
                               double delta, std::uint64_t seed,
                               const ProbeOptions& options = {});

}  // namespace stablenash

#endif  // STABLENASH_STABILITY_H_
