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

#include "stablenash/generators.h"

#include <cmath>

#include "stablenash/embedding.h"
#include "stablenash/errors.h"
#include "stablenash/random.h"

namespace stablenash {

namespace {

void RequireAtLeast(std::size_t n, std::size_t lo, const char* what) {
  if (n < lo) {
    throw ParameterError(std::string(what) + " needs at least " +
                         std::to_string(lo) + " actions");
  }
}

}  // namespace

BimatrixGame PublicGoods(std::size_t n) {
  RequireAtLeast(n, 2, "public goods game");
  Matrix r(n, n);
  Matrix c(n, n);
  const double scale = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double di = static_cast<double>(i);
      const double dj = static_cast<double>(j);
      r(i, j) = (0.75 * dj - 0.25 * di) / scale;
      c(i, j) = (0.75 * di - 0.25 * dj) / scale;
    }
  }
  return BimatrixGame(std::move(r), std::move(c));
}

BimatrixGame MeetingGame(std::size_t n) {
  RequireAtLeast(n, 2, "meeting game");
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m(0, j) = 0.5;
  for (std::size_t i = 1; i < n; ++i) m(i, i) = 1.0;
  // Payoffs depend only on one's own action and a match, so C = R^T.
  return BimatrixGame(m, m.Transposed());
}

BimatrixGame MatchingPennies() {
  return BimatrixGame(Matrix::FromRows({{1, 0}, {0, 1}}),
                      Matrix::FromRows({{0, 1}, {1, 0}}));
}

BimatrixGame SeparatingGame(double gap) {
  if (!(gap > 0.0 && gap <= 1.0))
    throw ParameterError("gap must lie in (0, 1]");
  return BimatrixGame(Matrix::FromRows({{1, 1}, {1 - gap, 1 - gap}}),
                      Matrix::FromRows({{1, 1 - gap}, {1, 1 - gap}}));
}

BimatrixGame DominantRowGame() {
  return BimatrixGame(Matrix::FromRows({{1, 1}, {0, 0}}),
                      Matrix::FromRows({{0, 0}, {1, 1}}));
}

BimatrixGame RandomGame(std::size_t rows, std::size_t cols,
                        std::uint64_t seed) {
  RequireAtLeast(rows, 1, "random game");
  RequireAtLeast(cols, 1, "random game");
  Rng rng(seed);
  Matrix r(rows, cols);
  Matrix c(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = rng.Unit();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) c(i, j) = rng.Unit();
  return BimatrixGame(std::move(r), std::move(c));
}

BimatrixGame RandomConstantSumGame(std::size_t rows, std::size_t cols,
                                   double constant, std::uint64_t seed) {
  RequireAtLeast(rows, 1, "random game");
  RequireAtLeast(cols, 1, "random game");
  if (!std::isfinite(constant)) throw ParameterError("constant must be finite");
  Rng rng(seed);
  Matrix r(rows, cols);
  Matrix c(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      r(i, j) = rng.Unit();
      c(i, j) = constant - r(i, j);
    }
  }
  const double lo = std::min(0.0, constant - 1.0);
  const double hi = std::max(1.0, constant);
  return BimatrixGame(std::move(r), std::move(c), PayoffRange{lo, hi});
}

BimatrixGame RandomConcentrationGame(std::size_t n, double delta,
                                     std::uint64_t seed) {
  RequireAtLeast(n, 1, "concentration game");
  Rng rng(seed);
  Matrix row_shift(n, n);
  Matrix col_shift(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) row_shift(i, j) = -delta * rng.Unit();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) col_shift(i, j) = delta * rng.Unit();
  return ConcentrationGame(n, delta, row_shift, col_shift);
}

}  // namespace stablenash
