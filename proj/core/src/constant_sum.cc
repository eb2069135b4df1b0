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

#include "stablenash/constant_sum.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "stablenash/errors.h"
#include "stablenash/lp.h"
#include "stablenash/random.h"
#include "stablenash/support_search.h"

namespace stablenash {

std::optional<double> CheckConstantSum(const BimatrixGame& game,
                                       const Tolerances& tol) {
  const Matrix& r = game.row_payoffs();
  const Matrix& c = game.col_payoffs();
  const double first = r(0, 0) + c(0, 0);
  for (std::size_t i = 0; i < game.rows(); ++i)
    for (std::size_t j = 0; j < game.cols(); ++j)
      if (std::abs(r(i, j) + c(i, j) - first) > tol.zero) return std::nullopt;
  return first;
}

namespace {

// max_x min_k (M^T x)_k with x on the simplex over M's rows. Returns the
// strategy and the value.
std::pair<std::vector<double>, double> Maximin(const Matrix& m,
                                               const Tolerances& tol) {
  const std::size_t n = m.rows();
  lp::LinearProgram prog(n + 1);
  std::vector<double> ones(n + 1, 1.0);
  ones[n] = 0.0;
  prog.AddConstraint(std::move(ones), lp::Relation::kEqual, 1.0);
  for (std::size_t k = 0; k < m.cols(); ++k) {
    std::vector<double> row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = m(i, k);
    row[n] = -1.0;
    prog.AddConstraint(std::move(row), lp::Relation::kGreaterEqual, 0.0);
  }
  prog.SetBounds(n, -lp::kInfinity, lp::kInfinity);
  std::vector<double> obj(n + 1, 0.0);
  obj[n] = 1.0;
  prog.SetObjective(std::move(obj), lp::Sense::kMaximize);
  const lp::Outcome out = lp::SolveLp(prog, tol.lp);
  if (out.status != lp::Status::kOptimal)
    throw NumericalError(std::string("maximin LP ended ") +
                         lp::StatusName(out.status));
  std::vector<double> x(out.solution.begin(), out.solution.begin() + n);
  double sum = 0.0;
  for (double& v : x) {
    v = std::max(0.0, v);
    sum += v;
  }
  for (double& v : x) v /= sum;
  return {std::move(x), out.solution[n]};
}

}  // namespace

MinimaxSolution MinimaxSolve(const BimatrixGame& game, const Tolerances& tol) {
  const auto constant = CheckConstantSum(game, tol);
  if (!constant) throw DomainError("game is not constant-sum");
  auto [p, v_row] = Maximin(game.row_payoffs(), tol);
  auto [q, v_col] = Maximin(game.col_payoffs().Transposed(), tol);
  MinimaxSolution sol{MixedStrategy(std::move(p), tol).Cleaned(tol.zero),
                      MixedStrategy(std::move(q), tol).Cleaned(tol.zero),
                      v_row, v_col, *constant};
  if (std::abs(sol.row_value + sol.col_value - sol.constant) > tol.eq) {
    std::ostringstream msg;
    msg << "minimax values " << sol.row_value << " + " << sol.col_value
        << " do not add up to the constant " << sol.constant;
    throw NumericalError(msg.str());
  }
  return sol;
}

PartitionSolution SolvePartition(const BimatrixGame& game, Player player,
                                 const MixedStrategy& anchor,
                                 std::uint64_t plus_mask, double value,
                                 double alpha,
                                 const std::vector<std::size_t>* confine,
                                 const Tolerances& tol) {
  // Rows of `guard` are the opponent's pure replies; entry (k, i) is the
  // mover's payoff for own action i against reply k.
  const Matrix guard = player == Player::kRow
                           ? game.row_payoffs().Transposed()
                           : game.col_payoffs();
  const std::size_t n = guard.cols();
  if (anchor.size() != n) throw ShapeError("anchor does not match the game");

  lp::LinearProgram prog(n);
  prog.AddConstraint(std::vector<double>(n, 1.0), lp::Relation::kEqual, 1.0);
  for (std::size_t k = 0; k < guard.rows(); ++k) {
    const auto row = guard.row(k);
    prog.AddConstraint(std::vector<double>(row.begin(), row.end()),
                       lp::Relation::kGreaterEqual, value - alpha);
  }
  if (confine != nullptr) {
    std::vector<bool> allowed(n, false);
    for (std::size_t i : *confine) allowed.at(i) = true;
    for (std::size_t i = 0; i < n; ++i)
      if (!allowed[i]) prog.SetBounds(i, 0.0, 0.0);
  }

  const std::vector<std::size_t> supp = anchor.Support(tol.zero);
  std::vector<double> obj(n, 1.0);
  double constant = 0.0;
  for (std::size_t b = 0; b < supp.size(); ++b) {
    const std::size_t i = supp[b];
    const bool plus = b < 64 && ((plus_mask >> b) & 1u);
    obj[i] = plus ? 1.0 : -1.0;
    constant += plus ? -anchor[i] : anchor[i];
    prog.AddBound(i,
                  plus ? lp::Relation::kGreaterEqual : lp::Relation::kLessEqual,
                  anchor[i]);
  }
  prog.SetObjective(obj, lp::Sense::kMaximize);

  PartitionSolution out;
  const lp::Outcome res = lp::SolveLp(prog, tol.lp);
  if (!res.has_solution()) return out;
  out.feasible = true;
  out.objective = res.objective_value + constant;
  out.strategy = res.solution;
  return out;
}

namespace {

struct SideResult {
  double best_objective = 0.0;
  std::size_t solved = 0;
};

SideResult SweepPartitions(const BimatrixGame& game, Player player,
                           const MixedStrategy& anchor, double value,
                           double alpha,
                           const std::vector<std::size_t>* confine,
                           const CertificateOptions& options) {
  const std::size_t bits = anchor.Support(options.tol.zero).size();
  if (bits > options.max_partition_bits) {
    std::ostringstream msg;
    msg << "anchor support of " << bits << " actions needs 2^" << bits
        << " partitions, above the 2^" << options.max_partition_bits
        << " budget";
    throw ResourceError(msg.str());
  }
  SideResult side;
  const std::uint64_t count = std::uint64_t{1} << bits;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const PartitionSolution sol = SolvePartition(
        game, player, anchor, mask, value, alpha, confine, options.tol);
    ++side.solved;
    if (sol.feasible)
      side.best_objective = std::max(side.best_objective, sol.objective);
  }
  return side;
}

void CheckAlpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ParameterError("alpha must lie in (0, 1)");
}

}  // namespace

StrongStabilityCertificate StrongStabilityParameters(
    const BimatrixGame& game, double alpha, std::uint64_t seed,
    const CertificateOptions& options) {
  CheckAlpha(alpha);
  const Tolerances& tol = options.tol;
  MinimaxSolution minimax = MinimaxSolve(game, tol);

  const std::size_t n = std::max(game.rows(), game.cols());
  const double raw_target =
      options.support_factor * std::log(static_cast<double>(n)) /
      (alpha * alpha);
  const std::size_t target =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(raw_target)));

  StrategyProfile anchor{minimax.p_star, minimax.q_star};
  bool sampled = false;
  if (minimax.p_star.Support(tol.zero).size() > target ||
      minimax.q_star.Support(tol.zero).size() > target) {
    bool found = false;
    for (std::size_t attempt = 0; attempt < options.max_resamples; ++attempt) {
      StrategyProfile trial{
          EmpiricalSample(minimax.p_star, target,
                          Rng::ForStream(seed, 2 * attempt).Next()),
          EmpiricalSample(minimax.q_star, target,
                          Rng::ForStream(seed, 2 * attempt + 1).Next())};
      if (ComputeRegrets(game, trial, tol).max_regret() <= alpha) {
        anchor = std::move(trial);
        found = true;
        break;
      }
    }
    if (!found) {
      std::ostringstream msg;
      msg << "no sampled anchor was an alpha-equilibrium after "
          << options.max_resamples << " draws";
      throw ResourceError(msg.str());
    }
    sampled = true;
  }

  const SideResult row = SweepPartitions(game, Player::kRow, anchor.row,
                                         minimax.row_value, alpha, nullptr,
                                         options);
  const SideResult col = SweepPartitions(game, Player::kCol, anchor.col,
                                         minimax.col_value, alpha, nullptr,
                                         options);
  const double row_delta = std::clamp(row.best_objective / 2.0, 0.0, 1.0);
  const double col_delta = std::clamp(col.best_objective / 2.0, 0.0, 1.0);
  const double delta = std::max(row_delta, col_delta);
  const RegretReport anchor_regrets = ComputeRegrets(game, anchor, tol);

  return StrongStabilityCertificate{
      .alpha = alpha,
      .delta = delta,
      .row_delta = row_delta,
      .col_delta = col_delta,
      .raw_objective = std::max(row.best_objective, col.best_objective),
      .anchor = std::move(anchor),
      .anchor_sampled = sampled,
      .anchor_target_support = target,
      .partitions_solved = row.solved + col.solved,
      .minimax = std::move(minimax),
      .anchor_regrets = anchor_regrets,
      .stable_eps = alpha / 2.0,
      .stable_delta = 2.0 * delta,
      .unstable_eps = alpha,
      .unstable_delta = delta / 2.0,
  };
}

WellSupportedCertificate WellSupportedStabilityParameters(
    const BimatrixGame& game, double alpha, std::uint64_t seed,
    const CertificateOptions& options) {
  StrongStabilityCertificate strong =
      StrongStabilityParameters(game, alpha, seed, options);
  const auto row_supp = strong.minimax.p_star.Support(options.tol.zero);
  const auto col_supp = strong.minimax.q_star.Support(options.tol.zero);
  const SideResult row =
      SweepPartitions(game, Player::kRow, strong.anchor.row,
                      strong.minimax.row_value, alpha, &row_supp, options);
  const SideResult col =
      SweepPartitions(game, Player::kCol, strong.anchor.col,
                      strong.minimax.col_value, alpha, &col_supp, options);

  WellSupportedCertificate out{
      .alpha = alpha,
      .delta_low = 0.0,
      .delta_high = strong.delta,
      .row_delta_low = std::clamp(row.best_objective / 2.0, 0.0, 1.0),
      .col_delta_low = std::clamp(col.best_objective / 2.0, 0.0, 1.0),
      .strong = std::move(strong),
  };
  out.delta_low = std::max(out.row_delta_low, out.col_delta_low);
  return out;
}

}  // namespace stablenash
