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

#include "stablenash/supports.h"

#include <algorithm>
#include <limits>

namespace stablenash {

std::vector<ActionSet> SubsetsOfSize(std::size_t n, std::size_t k) {
  std::vector<ActionSet> out;
  if (k == 0 || k > n) return out;
  ActionSet s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t SaturatingAdd(std::uint64_t a, std::uint64_t b) {
  return b > kSaturated - a ? kSaturated : a + b;
}

std::uint64_t Binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact at every step.
    const std::uint64_t next = SaturatingMul(r, n - k + i);
    if (next == kSaturated) return kSaturated;
    r = next / i;
  }
  return r;
}

}  // namespace

std::uint64_t CountSupportPairs(std::size_t rows, std::size_t cols,
                                std::size_t max_support) {
  std::uint64_t row_sets = 0;
  std::uint64_t col_sets = 0;
  for (std::size_t k = 1; k <= std::min(max_support, rows); ++k)
    row_sets = SaturatingAdd(row_sets, Binomial(rows, k));
  for (std::size_t k = 1; k <= std::min(max_support, cols); ++k)
    col_sets = SaturatingAdd(col_sets, Binomial(cols, k));
  return SaturatingMul(row_sets, col_sets);
}

std::uint64_t ForEachSupportPair(
    std::size_t rows, std::size_t cols, std::size_t max_support,
    const std::function<bool(const ActionSet&, const ActionSet&)>& visit) {
  const std::size_t top = std::min(max_support, std::max(rows, cols));
  std::uint64_t visited = 0;
  for (std::size_t k = 1; k <= top; ++k) {
    for (std::size_t kr = 1; kr <= std::min(k, rows); ++kr) {
      for (std::size_t kc = 1; kc <= std::min(k, cols); ++kc) {
        if (std::max(kr, kc) != k) continue;
        const auto row_sets = SubsetsOfSize(rows, kr);
        const auto col_sets = SubsetsOfSize(cols, kc);
        for (const ActionSet& sr : row_sets) {
          for (const ActionSet& sc : col_sets) {
            ++visited;
            if (!visit(sr, sc)) return visited;
          }
        }
      }
    }
  }
  return visited;
}

}  // namespace stablenash
