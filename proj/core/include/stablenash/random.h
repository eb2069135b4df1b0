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

#ifndef STABLENASH_RANDOM_H_
#define STABLENASH_RANDOM_H_

#include <cstdint>
#include <random>

namespace stablenash {

// Seeded generator with platform-independent derived draws. The standard
// <random> distributions are implementation-defined, so the conversions
// from raw 64-bit output are done here to keep results reproducible
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for work item `index` under a base seed.
  static Rng ForStream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t Next() { return engine_(); }
  // Uniform on [0, 1).
  double Unit();
  // Uniform on [lo, hi).
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Unit(); }
  // Uniform on {0, ..., n-1}; n must be positive.
  std::uint64_t Below(std::uint64_t n);
  bool Coin() { return (Next() >> 63) != 0; }
  // Exponential(1); used for Dirichlet draws.
  double Exponential();

 private:
  std::mt19937_64 engine_;
};

}  // namespace stablenash

#endif  // STABLENASH_RANDOM_H_
