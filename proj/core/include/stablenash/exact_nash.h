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

// Exact Nash equilibria by support enumeration.
//
// For each support pair (S_row, S_col) two decoupled LPs ask for a column
// mix on S_col that makes every row in S_row a best response, and a row mix
// on S_row doing the same for S_col. Each mix must put at least t > 0 on
// every action of its support, so the support is attained exactly.

#ifndef STABLENASH_EXACT_NASH_H_
#define STABLENASH_EXACT_NASH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stablenash/game.h"
#include "stablenash/tolerances.h"

namespace stablenash {

inline constexpr std::uint64_t kDefaultSupportBudget = 4'000'000;

struct EnumerationOptions {
  // Largest support size tried; 0 means max(rows, cols).
  std::size_t max_support = 0;
  // Cap on support pairs; exceeding it throws ResourceError.
  std::uint64_t budget = kDefaultSupportBudget;
  Tolerances tol;
};

struct EquilibriumSet {
  std::vector<StrategyProfile> equilibria;
  std::size_t max_support = 0;
  std::uint64_t pairs_examined = 0;
  // Some support pair admits a continuum of equilibria; the list holds one
  // representative point per such pair.
  bool has_continuum = false;
  // True when every support size was examined and no continuum was found,
  // so the list is the whole equilibrium set.
  bool complete = false;
  Tolerances tol;
};

// Distinct equilibria (deduplicated at tol.dedup), each verified to have
// regret at most tol.eq. Order is deterministic.
EquilibriumSet EnumerateEquilibria(const BimatrixGame& game,
                                   const EnumerationOptions& options = {});

// min over the set of ProfileDistance(profile, e). Throws DomainError
// on an empty set.
double DistanceToSet(const StrategyProfile& profile,
                     std::span<const StrategyProfile> set);
double DistanceToSet(const StrategyProfile& profile, const EquilibriumSet& set);

// Index of the nearest member (lowest index on ties).
std::size_t NearestIndex(const StrategyProfile& profile,
                         std::span<const StrategyProfile> set);

}  // namespace stablenash

#endif  // STABLENASH_EXACT_NASH_H_
