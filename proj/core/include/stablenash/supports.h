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

#ifndef STABLENASH_SUPPORTS_H_
#define STABLENASH_SUPPORTS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace stablenash {

using ActionSet = std::vector<std::size_t>;

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<ActionSet> SubsetsOfSize(std::size_t n, std::size_t k);

// Number of (row support, column support) pairs with both sizes in
// [1, max_support]. Saturates at UINT64_MAX.
std::uint64_t CountSupportPairs(std::size_t rows, std::size_t cols,
                                std::size_t max_support);

// Visits support pairs ordered by max(|S_row|, |S_col|), then |S_row|, then
// |S_col|, then lexicographically. Stops early when `visit` returns false.
// Returns the number of pairs visited.
std::uint64_t ForEachSupportPair(
    std::size_t rows, std::size_t cols, std::size_t max_support,
    const std::function<bool(const ActionSet&, const ActionSet&)>& visit);

}  // namespace stablenash

#endif  // STABLENASH_SUPPORTS_H_
