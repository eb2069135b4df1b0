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

// Small-support search for well-supported approximate equilibria, and the
// heavy/light compression that shows small supports suffice in stable games.

#ifndef STABLENASH_SUPPORT_SEARCH_H_
#define STABLENASH_SUPPORT_SEARCH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "stablenash/exact_nash.h"
#include "stablenash/game.h"
#include "stablenash/supports.h"
#include "stablenash/tolerances.h"

namespace stablenash {

// A profile supported inside (row_support, col_support) that is a
// well-supported eps-equilibrium, or nullopt. Solved as two LPs that each
// maximize a common slack; feasible iff the slack is >= -tol.lp.
std::optional<StrategyProfile> WellSupportedFeasible(
    const BimatrixGame& game, const ActionSet& row_support,
    const ActionSet& col_support, double eps, const Tolerances& tol = {});

struct SearchResult {
  StrategyProfile profile;
  ActionSet row_support;
  ActionSet col_support;
  std::uint64_t supports_tried = 0;
  double epsilon = 0.0;
  RegretReport regrets;
};

// Tries support pairs up to `max_support` in enumeration order and returns
// the first hit. Throws ResourceError once more than `budget` pairs have
// been tried.
std::optional<SearchResult> FindWellSupported(
    const BimatrixGame& game, double eps, std::size_t max_support,
    std::uint64_t budget = kDefaultSupportBudget, const Tolerances& tol = {});

enum class SplitRule {
  // Every light action has probability at most Pr[light] / S.
  kLightIsSpread,
  // The heavy part carries at least 1 - 8 * delta of the mass.
  kHeavyDominates,
};

struct HeavyLightSplit {
  std::vector<std::size_t> heavy;  // ascending
  std::vector<std::size_t> light;  // ascending
  double heavy_mass = 0.0;
  double light_mass = 0.0;
  SplitRule rule = SplitRule::kLightIsSpread;
  // Pr[light] / S at termination.
  double light_threshold = 0.0;
};

// Greedy split of supp(p): moves the largest remaining entry (lowest index
// on ties) to the heavy set until one of the two rules holds. The heavy-mass
// rule is checked first. Requires S > 0 and 0 < delta <= 1/8.
HeavyLightSplit HeavyLightPartition(const MixedStrategy& p, double s,
                                    double delta, const Tolerances& tol = {});

// Empirical distribution of k independent draws from p.
MixedStrategy EmpiricalSample(const MixedStrategy& p, std::size_t k,
                              std::uint64_t seed);

inline constexpr double kDefaultSupportConstant = 56.0 * 56.0;

// c * (delta / eps)^2 * ln(n), floored at 1.
double SupportSizeBound(double c, double delta, double eps, std::size_t n);

struct CompressionResult {
  StrategyProfile profile;
  HeavyLightSplit row_split;
  HeavyLightSplit col_split;
  double support_bound = 0.0;  // S
  std::size_t sample_size = 0;
  RegretReport regrets;
};

// Keeps each player's heavy part and replaces the light part with a
// k = ceil(S) sample of it. A player with no light actions is unchanged.
CompressionResult SmallSupportApproximation(
    const BimatrixGame& game, const StrategyProfile& equilibrium, double eps,
    double delta, std::uint64_t seed,
    double support_constant = kDefaultSupportConstant,
    const Tolerances& tol = {});

}  // namespace stablenash

#endif  // STABLENASH_SUPPORT_SEARCH_H_
