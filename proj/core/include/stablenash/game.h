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

// Core value types for two-player normal-form games: payoff matrices, mixed
// strategies, profiles, and the regret measures behind approximate and
// well-supported approximate equilibria.
//
// Indexing is 0-based throughout. Rows are the row player's actions, columns
// the column player's.

#ifndef STABLENASH_GAME_H_
#define STABLENASH_GAME_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "stablenash/tolerances.h"

namespace stablenash {

// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  // Throws ShapeError if the rows are ragged.
  static Matrix FromRows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> data() const { return data_; }

  // M v.
  std::vector<double> Times(std::span<const double> v) const;
  // v^T M.
  std::vector<double> TransposeTimes(std::span<const double> v) const;

  Matrix Transposed() const;
  std::vector<std::vector<double>> ToRows() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Interval the payoffs are declared to lie in. Entries outside it are
// reported, never rejected: perturbed games legitimately leave it.
struct PayoffRange {
  double lo = 0.0;
  double hi = 1.0;
  friend bool operator==(const PayoffRange&, const PayoffRange&) = default;
};

enum class Player { kRow, kCol };

struct RangeViolation {
  Player player;
  std::size_t row;
  std::size_t col;
  double value;
};

// Pair of payoff matrices R (row player) and C (column player) with the same
// shape, at least 1x1, all entries finite.
class BimatrixGame {
 public:
  // Throws ShapeError on mismatched or empty matrices, ValidationError on
  // non-finite entries or an inverted range.
  BimatrixGame(Matrix row_payoffs, Matrix col_payoffs, PayoffRange range = {});

  const Matrix& row_payoffs() const { return row_payoffs_; }
  const Matrix& col_payoffs() const { return col_payoffs_; }
  const PayoffRange& nominal_range() const { return range_; }
  std::size_t rows() const { return row_payoffs_.rows(); }
  std::size_t cols() const { return row_payoffs_.cols(); }
  bool square() const { return rows() == cols(); }

  // Entries lying outside the nominal range by more than `slack`.
  std::vector<RangeViolation> OutOfRangeEntries(double slack = 0.0) const;

  friend bool operator==(const BimatrixGame&, const BimatrixGame&) = default;

 private:
  Matrix row_payoffs_;
  Matrix col_payoffs_;
  PayoffRange range_;
};

// Probability vector over one player's actions.
class MixedStrategy {
 public:
  // Entries in [-tol.zero, 0) are clamped to 0. Throws ValidationError on
  // an empty vector, a negative or non-finite entry, or a total mass
  // outside [1 - tol.sum, 1 + tol.sum].
  explicit MixedStrategy(std::vector<double> probs, const Tolerances& tol = {});

  static MixedStrategy Pure(std::size_t num_actions, std::size_t action);
  static MixedStrategy Uniform(std::size_t num_actions);
  static MixedStrategy UniformOver(std::size_t num_actions,
                                   std::span<const std::size_t> actions);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

  // {i : probs[i] > tau_zero}, ascending.
  std::vector<std::size_t> Support(double tau_zero = Tolerances{}.zero) const;

  // Drops entries at or below tau_zero and renormalizes the rest.
  MixedStrategy Cleaned(double tau_zero = Tolerances{}.zero) const;

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  struct Unchecked {};
  MixedStrategy(std::vector<double> probs, Unchecked)
      : probs_(std::move(probs)) {}

  std::vector<double> probs_;
};

struct StrategyProfile {
  MixedStrategy row;
  MixedStrategy col;

  StrategyProfile Cleaned(double tau_zero = Tolerances{}.zero) const {
    return {row.Cleaned(tau_zero), col.Cleaned(tau_zero)};
  }
  friend bool operator==(const StrategyProfile&,
                         const StrategyProfile&) = default;
};

// Incentives to deviate at a profile. All four fields are floored at 0.
//   row_regret = max_i (Rq)_i - p^T R q
//   row_ws_gap = max_j (Rq)_j - min_{i in supp(p)} (Rq)_i
// and symmetrically for the column player with p^T C.
struct RegretReport {
  double row_regret = 0.0;
  double col_regret = 0.0;
  double row_ws_gap = 0.0;
  double col_ws_gap = 0.0;

  double max_regret() const;
  double max_ws_gap() const;
  bool IsEpsilonEquilibrium(double eps) const { return max_regret() <= eps; }
  bool IsWellSupported(double eps) const { return max_ws_gap() <= eps; }
};

struct Payoffs {
  double row;
  double col;
};

// Throws ShapeError unless the strategy lengths match the game.
void CheckProfileShape(const BimatrixGame& game,
                       const StrategyProfile& profile);

// (p^T R q, p^T C q).
Payoffs ExpectedPayoffs(const BimatrixGame& game,
                        const StrategyProfile& profile);

// Payoff of every pure row against q, i.e. R q.
std::vector<double> RowActionPayoffs(const BimatrixGame& game,
                                     const MixedStrategy& q);
// Payoff of every pure column against p, i.e. p^T C.
std::vector<double> ColActionPayoffs(const BimatrixGame& game,
                                     const MixedStrategy& p);

// Half the L1 distance. Throws ShapeError on a length mismatch.
double VariationDistance(const MixedStrategy& a, const MixedStrategy& b);

// Maximum of the two players' variation distances.
double ProfileDistance(const StrategyProfile& a, const StrategyProfile& b);

RegretReport ComputeRegrets(const BimatrixGame& game,
                            const StrategyProfile& profile,
                            const Tolerances& tol = {});

// True iff every entry of both matrices moved by at most alpha + tol.zero.
bool IsPerturbationWithin(const BimatrixGame& game,
                          const BimatrixGame& perturbed, double alpha,
                          const Tolerances& tol = {});

}  // namespace stablenash

#endif  // STABLENASH_GAME_H_
