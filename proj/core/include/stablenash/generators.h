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

// Named game families and seeded random games. All actions are 0-based.

#ifndef STABLENASH_GENERATORS_H_
#define STABLENASH_GENERATORS_H_

#include <cstddef>
#include <cstdint>

#include "stablenash/game.h"

namespace stablenash {

// Two contributors choosing a contribution level i in {0..n-1}; each gets
// back 0.75 of the total and pays its own share:
//   R[i][j] = (0.75 j - 0.25 i) / n,   C[i][j] = (0.75 i - 0.25 j) / n.
// Entries go negative; the nominal range stays [0, 1] so they are reported
// by OutOfRangeEntries rather than rejected.
BimatrixGame PublicGoods(std::size_t n);

// Action 0 stays home and pays 1/2 regardless. Action i > 0 is a meeting
// place paying 1 if the other player picks the same place, 0 otherwise.
// Symmetric for both players.
BimatrixGame MeetingGame(std::size_t n);

// R = [[1, 0], [0, 1]], C = 1 - R.
BimatrixGame MatchingPennies();

// Row 0 and column 0 are each better by `gap` than the alternative:
//   R = [[1, 1], [1 - gap, 1 - gap]],  C = [[1, 1 - gap], [1, 1 - gap]].
// The unique equilibrium is pure, yet plain approximate equilibria can put
// a lot of mass on action 1 while well-supported ones cannot.
BimatrixGame SeparatingGame(double gap);

// R = [[1, 1], [0, 0]], C = 1 - R. Row 0 dominates; the column player is
// indifferent.
BimatrixGame DominantRowGame();

// i.i.d. uniform [0, 1) entries.
BimatrixGame RandomGame(std::size_t rows, std::size_t cols,
                        std::uint64_t seed);

// Uniform R in [0, 1) and C = constant - R.
BimatrixGame RandomConstantSumGame(std::size_t rows, std::size_t cols,
                                   double constant, std::uint64_t seed);

// ConcentrationGame with row shifts uniform in [-delta, 0] and column shifts
// uniform in [0, delta].
BimatrixGame RandomConcentrationGame(std::size_t n, double delta,
                                     std::uint64_t seed);

}  // namespace stablenash

#endif  // STABLENASH_GENERATORS_H_
