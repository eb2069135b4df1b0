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

#include "stablenash/game.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "stablenash/errors.h"

namespace stablenash {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::FromRows(const std::vector<std::vector<double>>& rows) {
  const std::size_t num_cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), num_cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != num_cols) {
      throw ShapeError("ragged matrix: row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(num_cols));
    }
    std::copy(rows[i].begin(), rows[i].end(),
              m.data_.begin() + static_cast<std::ptrdiff_t>(i * num_cols));
  }
  return m;
}

std::vector<double> Matrix::Times(std::span<const double> v) const {
  if (v.size() != cols_) throw ShapeError("matrix-vector length mismatch");
  std::vector<double> out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

std::vector<double> Matrix::TransposeTimes(std::span<const double> v) const {
  if (v.size() != rows_) throw ShapeError("vector-matrix length mismatch");
  std::vector<double> out(cols_, 0.0);
  for (std::size_t j = 0; j < cols_; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) acc += v[i] * (*this)(i, j);
    out[j] = acc;
  }
  return out;
}

Matrix Matrix::Transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<std::vector<double>> Matrix::ToRows() const {
  std::vector<std::vector<double>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto r = row(i);
    out[i].assign(r.begin(), r.end());
  }
  return out;
}

BimatrixGame::BimatrixGame(Matrix row_payoffs, Matrix col_payoffs,
                           PayoffRange range)
    : row_payoffs_(std::move(row_payoffs)),
      col_payoffs_(std::move(col_payoffs)),
      range_(range) {
  if (row_payoffs_.rows() == 0 || row_payoffs_.cols() == 0) {
    throw ShapeError("payoff matrices must be at least 1x1");
  }
  if (row_payoffs_.rows() != col_payoffs_.rows() ||
      row_payoffs_.cols() != col_payoffs_.cols()) {
    throw ShapeError("R is " + std::to_string(row_payoffs_.rows()) + "x" +
                     std::to_string(row_payoffs_.cols()) + " but C is " +
                     std::to_string(col_payoffs_.rows()) + "x" +
                     std::to_string(col_payoffs_.cols()));
  }
  auto finite = [](double x) { return std::isfinite(x); };
  if (!std::ranges::all_of(row_payoffs_.data(), finite) ||
      !std::ranges::all_of(col_payoffs_.data(), finite)) {
    throw ValidationError("payoff entries must be finite");
  }
  if (!std::isfinite(range_.lo) || !std::isfinite(range_.hi) ||
      range_.lo > range_.hi) {
    throw ValidationError("nominal payoff range must be a finite interval");
  }
}

std::vector<RangeViolation> BimatrixGame::OutOfRangeEntries(
    double slack) const {
  std::vector<RangeViolation> out;
  auto scan = [&](const Matrix& m, Player who) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const double v = m(i, j);
        if (v < range_.lo - slack || v > range_.hi + slack) {
          out.push_back({who, i, j, v});
        }
      }
    }
  };
  scan(row_payoffs_, Player::kRow);
  scan(col_payoffs_, Player::kCol);
  return out;
}

MixedStrategy::MixedStrategy(std::vector<double> probs, const Tolerances& tol)
    : probs_(std::move(probs)) {
  if (probs_.empty()) throw ValidationError("strategy must be non-empty");
  double total = 0.0;
  for (double& x : probs_) {
    if (!std::isfinite(x)) throw ValidationError("non-finite probability");
    if (x < 0.0) {
      if (x < -tol.zero) {
        throw ValidationError("negative probability " + std::to_string(x));
      }
      x = 0.0;
    }
    total += x;
  }
  if (std::abs(total - 1.0) > tol.sum) {
    throw ValidationError("probabilities sum to " + std::to_string(total) +
                          ", not 1");
  }
}

MixedStrategy MixedStrategy::Pure(std::size_t num_actions,
                                  std::size_t action) {
  if (action >= num_actions) throw ShapeError("pure action out of range");
  std::vector<double> p(num_actions, 0.0);
  p[action] = 1.0;
  return MixedStrategy(std::move(p), Unchecked{});
}

MixedStrategy MixedStrategy::Uniform(std::size_t num_actions) {
  if (num_actions == 0) throw ValidationError("strategy must be non-empty");
  return MixedStrategy(
      std::vector<double>(num_actions, 1.0 / static_cast<double>(num_actions)),
      Unchecked{});
}

MixedStrategy MixedStrategy::UniformOver(
    std::size_t num_actions, std::span<const std::size_t> actions) {
  if (actions.empty()) throw DomainError("uniform over an empty action set");
  std::vector<double> p(num_actions, 0.0);
  const double w = 1.0 / static_cast<double>(actions.size());
  for (std::size_t a : actions) {
    if (a >= num_actions) throw ShapeError("action index out of range");
    p[a] += w;
  }
  return MixedStrategy(std::move(p), Unchecked{});
}

std::vector<std::size_t> MixedStrategy::Support(double tau_zero) const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < probs_.size(); ++i)
    if (probs_[i] > tau_zero) s.push_back(i);
  return s;
}

MixedStrategy MixedStrategy::Cleaned(double tau_zero) const {
  std::vector<double> p = probs_;
  double total = 0.0;
  for (double& x : p) {
    if (x <= tau_zero) x = 0.0;
    total += x;
  }
  if (total <= 0.0) return *this;
  for (double& x : p) x /= total;
  return MixedStrategy(std::move(p), Unchecked{});
}

double RegretReport::max_regret() const {
  return std::max(row_regret, col_regret);
}

double RegretReport::max_ws_gap() const {
  return std::max(row_ws_gap, col_ws_gap);
}

void CheckProfileShape(const BimatrixGame& game,
                       const StrategyProfile& profile) {
  if (profile.row.size() != game.rows() || profile.col.size() != game.cols()) {
    throw ShapeError("profile is " + std::to_string(profile.row.size()) + "x" +
                     std::to_string(profile.col.size()) + " but game is " +
                     std::to_string(game.rows()) + "x" +
                     std::to_string(game.cols()));
  }
}

namespace {

double Bilinear(const Matrix& m, const MixedStrategy& p,
                const MixedStrategy& q) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (p[i] == 0.0) continue;
    double row = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) row += m(i, j) * q[j];
    acc += p[i] * row;
  }
  return acc;
}

}  // namespace

Payoffs ExpectedPayoffs(const BimatrixGame& game,
                        const StrategyProfile& profile) {
  CheckProfileShape(game, profile);
  return {Bilinear(game.row_payoffs(), profile.row, profile.col),
          Bilinear(game.col_payoffs(), profile.row, profile.col)};
}

std::vector<double> RowActionPayoffs(const BimatrixGame& game,
                                     const MixedStrategy& q) {
  if (q.size() != game.cols()) throw ShapeError("column strategy length");
  return game.row_payoffs().Times(q.probs());
}

std::vector<double> ColActionPayoffs(const BimatrixGame& game,
                                     const MixedStrategy& p) {
  if (p.size() != game.rows()) throw ShapeError("row strategy length");
  return game.col_payoffs().TransposeTimes(p.probs());
}

double VariationDistance(const MixedStrategy& a, const MixedStrategy& b) {
  if (a.size() != b.size()) {
    throw ShapeError("variation distance of strategies with " +
                     std::to_string(a.size()) + " and " +
                     std::to_string(b.size()) + " actions");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
  return std::min(1.0, 0.5 * acc);
}

double ProfileDistance(const StrategyProfile& a, const StrategyProfile& b) {
  return std::max(VariationDistance(a.row, b.row),
                  VariationDistance(a.col, b.col));
}

namespace {

// Returns {regret, ws_gap} for one player given its strategy and the payoff
// of each of its pure actions against the opponent.
std::pair<double, double> PlayerIncentives(const MixedStrategy& own,
                                           const std::vector<double>& payoff,
                                           double tau_zero) {
  double best = -std::numeric_limits<double>::infinity();
  double value = 0.0;
  double worst_supported = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < payoff.size(); ++i) {
    best = std::max(best, payoff[i]);
    value += own[i] * payoff[i];
    if (own[i] > tau_zero) worst_supported = std::min(worst_supported, payoff[i]);
  }
  const double regret = std::max(0.0, best - value);
  const double gap =
      std::isfinite(worst_supported) ? std::max(0.0, best - worst_supported)
                                     : 0.0;
  return {regret, gap};
}

}  // namespace

RegretReport ComputeRegrets(const BimatrixGame& game,
                            const StrategyProfile& profile,
                            const Tolerances& tol) {
  CheckProfileShape(game, profile);
  const auto [row_regret, row_gap] = PlayerIncentives(
      profile.row, RowActionPayoffs(game, profile.col), tol.zero);
  const auto [col_regret, col_gap] = PlayerIncentives(
      profile.col, ColActionPayoffs(game, profile.row), tol.zero);
  return {row_regret, col_regret, row_gap, col_gap};
}

bool IsPerturbationWithin(const BimatrixGame& game,
                          const BimatrixGame& perturbed, double alpha,
                          const Tolerances& tol) {
  if (game.rows() != perturbed.rows() || game.cols() != perturbed.cols()) {
    throw ShapeError("perturbation check on games of different shapes");
  }
  const double limit = alpha + tol.zero;
  auto within = [limit](const Matrix& a, const Matrix& b) {
    auto x = a.data();
    auto y = b.data();
    for (std::size_t k = 0; k < x.size(); ++k)
      if (std::abs(x[k] - y[k]) > limit) return false;
    return true;
  };
  return within(game.row_payoffs(), perturbed.row_payoffs()) &&
         within(game.col_payoffs(), perturbed.col_payoffs());
}

}  // namespace stablenash
