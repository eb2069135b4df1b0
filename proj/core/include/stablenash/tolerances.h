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

#ifndef STABLENASH_TOLERANCES_H_
#define STABLENASH_TOLERANCES_H_

namespace stablenash {

// Numerical thresholds shared by every module. Passed by value; there is no
// global tolerance state.
struct Tolerances {
  // Probabilities at or below this are outside the support.
  double zero = 1e-9;
  // Allowed deviation of a strategy's total mass from 1.
  double sum = 1e-9;
  // Simplex pivot and feasibility tolerance.
  double lp = 1e-8;
  // Regret allowed for a profile to count as an exact equilibrium.
  double eq = 1e-7;
  // Profiles closer than this are the same equilibrium.
  double dedup = 1e-6;
};

}  // namespace stablenash

#endif  // STABLENASH_TOLERANCES_H_
