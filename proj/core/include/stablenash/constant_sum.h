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

// Constant-sum games: minimax values, and certified strong stability radii
// obtained by maximizing distance from a small-support anchor over every
// sign pattern of the anchor's support.

#ifndef STABLENASH_CONSTANT_SUM_H_
#define STABLENASH_CONSTANT_SUM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "stablenash/game.h"
#include "stablenash/tolerances.h"

namespace stablenash {

// The common value of R + C if every entry agrees within tol.zero.
std::optional<double> CheckConstantSum(const BimatrixGame& game,
                                       const Tolerances& tol = {});

struct MinimaxSolution {
  MixedStrategy p_star;
  MixedStrategy q_star;
  double row_value = 0.0;
  double col_value = 0.0;
  double constant = 0.0;
};

// Maximin strategies for both players. Throws DomainError unless the game
// is constant-sum.
MinimaxSolution MinimaxSolve(const BimatrixGame& game,
                             const Tolerances& tol = {});

struct PartitionSolution {
  bool feasible = false;
  // Sum of gains on the plus side, losses on the minus side and mass
  // outside the anchor support; twice the variation distance at optimum.
  double objective = 0.0;
  std::vector<double> strategy;
};

// One sign-pattern LP for the row player (or, with `player` = kCol, for the
// column player against C). `plus_mask` bit b puts the b-th action of the
// anchor support on the plus side. With `confine_to_support`, strategies are
// restricted to `confine` (usually the minimax support).
PartitionSolution SolvePartition(const BimatrixGame& game, Player player,
                                 const MixedStrategy& anchor,
                                 std::uint64_t plus_mask, double value,
                                 double alpha,
                                 const std::vector<std::size_t>* confine,
                                 const Tolerances& tol = {});

struct CertificateOptions {
  // Anchor support target is ceil(support_factor * ln(n) / alpha^2).
  double support_factor = 1.0;
  std::size_t max_partition_bits = 20;
  std::size_t max_resamples = 64;
  Tolerances tol;
};

struct StrongStabilityCertificate {
  double alpha = 0.0;
  double delta = 0.0;
  double row_delta = 0.0;
  double col_delta = 0.0;
  // Largest raw LP objective (equals 2 * delta).
  double raw_objective = 0.0;
  StrategyProfile anchor;
  bool anchor_sampled = false;
  std::size_t anchor_target_support = 0;
  std::size_t partitions_solved = 0;
  MinimaxSolution minimax;
  RegretReport anchor_regrets;
  // Stable at (stable_eps, stable_delta); not stable at
  // (unstable_eps, unstable_delta).
  double stable_eps = 0.0;
  double stable_delta = 0.0;
  double unstable_eps = 0.0;
  double unstable_delta = 0.0;
};

StrongStabilityCertificate StrongStabilityParameters(
    const BimatrixGame& game, double alpha, std::uint64_t seed,
    const CertificateOptions& options = {});

struct WellSupportedCertificate {
  double alpha = 0.0;
  double delta_low = 0.0;
  double delta_high = 0.0;
  double row_delta_low = 0.0;
  double col_delta_low = 0.0;
  StrongStabilityCertificate strong;
};

// delta_high is the strong certificate; delta_low repeats the partition
// step with strategies confined to the minimax supports.
WellSupportedCertificate WellSupportedStabilityParameters(
    const BimatrixGame& game, double alpha, std::uint64_t seed,
    const CertificateOptions& options = {});

}  // namespace stablenash

#endif  // STABLENASH_CONSTANT_SUM_H_
