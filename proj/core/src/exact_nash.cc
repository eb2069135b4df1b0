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

#include "stablenash/exact_nash.h"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>

#include "stablenash/errors.h"
#include "stablenash/lp.h"
#include "stablenash/supports.h"

namespace stablenash {

namespace {

// `payoff` is oriented so that its rows are the indifferent player's actions
// and its columns the mixing player's. Builds the polytope of mixes x on
// `mixed` under which every action in `indifferent` is a best response.
// Variable layout: x over `mixed`, then one trailing variable.
lp::LinearProgram IndifferenceProgram(const Matrix& payoff,
                                      const ActionSet& indifferent,
                                      const ActionSet& mixed) {
  const std::size_t k = mixed.size();
  lp::LinearProgram prog(k + 1);
  std::vector<double> ones(k + 1, 1.0);
  ones[k] = 0.0;
  prog.AddConstraint(ones, lp::Relation::kEqual, 1.0);

  const std::size_t anchor = indifferent.front();
  std::vector<bool> in_set(payoff.rows(), false);
  for (std::size_t a : indifferent) in_set[a] = true;
  for (std::size_t a = 0; a < payoff.rows(); ++a) {
    if (a == anchor) continue;
    std::vector<double> row(k + 1, 0.0);
    for (std::size_t c = 0; c < k; ++c)
      row[c] = payoff(a, mixed[c]) - payoff(anchor, mixed[c]);
    prog.AddConstraint(std::move(row),
                       in_set[a] ? lp::Relation::kEqual
                                 : lp::Relation::kLessEqual,
                       0.0);
  }
  return prog;
}

std::vector<double> Expand(const std::vector<double>& x,
                           const ActionSet& mixed, std::size_t n) {
  std::vector<double> full(n, 0.0);
  for (std::size_t c = 0; c < mixed.size(); ++c)
    full[mixed[c]] = std::max(0.0, x[c]);
  return full;
}

// Mix with full support on `mixed`, or nullopt.
std::optional<std::vector<double>> SolveMix(const Matrix& payoff,
                                            const ActionSet& indifferent,
                                            const ActionSet& mixed,
                                            const Tolerances& tol) {
  const std::size_t k = mixed.size();
  lp::LinearProgram prog = IndifferenceProgram(payoff, indifferent, mixed);
  // x_c >= t for each c; maximize t in [0, 1].
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<double> row(k + 1, 0.0);
    row[c] = 1.0;
    row[k] = -1.0;
    prog.AddConstraint(std::move(row), lp::Relation::kGreaterEqual, 0.0);
  }
  prog.SetBounds(k, 0.0, 1.0);
  std::vector<double> obj(k + 1, 0.0);
  obj[k] = 1.0;
  prog.SetObjective(std::move(obj), lp::Sense::kMaximize);

  const lp::Outcome out = lp::SolveLp(prog, tol.lp);
  if (!out.has_solution() || out.solution[k] <= tol.zero) return std::nullopt;
  return Expand(out.solution, mixed, payoff.cols());
}

// True when some coordinate of the mix polytope has range above tol.dedup,
// i.e. the support pair carries a continuum of equilibria.
bool MixPolytopeIsWide(const Matrix& payoff, const ActionSet& indifferent,
                       const ActionSet& mixed, const Tolerances& tol) {
  if (mixed.size() == 1) return false;
  const std::size_t k = mixed.size();
  lp::LinearProgram base = IndifferenceProgram(payoff, indifferent, mixed);
  base.SetBounds(k, 0.0, 0.0);
  for (std::size_t c = 0; c < k; ++c) {
    double extremes[2];
    int idx = 0;
    for (lp::Sense sense : {lp::Sense::kMaximize, lp::Sense::kMinimize}) {
      lp::LinearProgram prog = base;
      std::vector<double> obj(k + 1, 0.0);
      obj[c] = 1.0;
      prog.SetObjective(std::move(obj), sense);
      const lp::Outcome out = lp::SolveLp(prog, tol.lp);
      if (!out.has_solution()) return false;
      extremes[idx++] = out.objective_value;
    }
    if (extremes[0] - extremes[1] > tol.dedup) return true;
  }
  return false;
}

}  // namespace

EquilibriumSet EnumerateEquilibria(const BimatrixGame& game,
                                   const EnumerationOptions& options) {
  const std::size_t rows = game.rows();
  const std::size_t cols = game.cols();
  const std::size_t full = std::max(rows, cols);
  const std::size_t max_support =
      options.max_support == 0 ? full : std::min(options.max_support, full);
  const Tolerances& tol = options.tol;

  const std::uint64_t pairs = CountSupportPairs(rows, cols, max_support);
  if (pairs > options.budget) {
    std::ostringstream msg;
    msg << "support enumeration needs " << pairs
        << " support pairs, budget is " << options.budget;
    throw ResourceError(msg.str());
  }

  EquilibriumSet result;
  result.max_support = max_support;
  result.tol = tol;

  const Matrix& row_payoffs = game.row_payoffs();
  const Matrix col_payoffs_t = game.col_payoffs().Transposed();

  result.pairs_examined = ForEachSupportPair(
      rows, cols, max_support,
      [&](const ActionSet& sr, const ActionSet& sc) {
        auto q = SolveMix(row_payoffs, sr, sc, tol);
        if (!q) return true;
        auto p = SolveMix(col_payoffs_t, sc, sr, tol);
        if (!p) return true;

        StrategyProfile candidate{MixedStrategy(std::move(*p), tol),
                                  MixedStrategy(std::move(*q), tol)};
        candidate = candidate.Cleaned(tol.zero);
        if (ComputeRegrets(game, candidate, tol).max_regret() > tol.eq)
          return true;

        // Checked before deduplication: a continuum can surface through a
        // support pair whose first solution is already listed.
        if (!result.has_continuum &&
            (MixPolytopeIsWide(row_payoffs, sr, sc, tol) ||
             MixPolytopeIsWide(col_payoffs_t, sc, sr, tol))) {
          result.has_continuum = true;
        }
        for (const StrategyProfile& seen : result.equilibria) {
          if (ProfileDistance(seen, candidate) <= tol.dedup) return true;
        }
        result.equilibria.push_back(std::move(candidate));
        return true;
      });

  result.complete = max_support >= full && !result.has_continuum;
  return result;
}

std::size_t NearestIndex(const StrategyProfile& profile,
                         std::span<const StrategyProfile> set) {
  if (set.empty())
    throw DomainError("distance to an empty equilibrium set");
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < set.size(); ++i) {
    const double d = ProfileDistance(profile, set[i]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

double DistanceToSet(const StrategyProfile& profile,
                     std::span<const StrategyProfile> set) {
  return ProfileDistance(profile, set[NearestIndex(profile, set)]);
}

double DistanceToSet(const StrategyProfile& profile,
                     const EquilibriumSet& set) {
  return DistanceToSet(profile, std::span<const StrategyProfile>(
                                    set.equilibria.data(),
                                    set.equilibria.size()));
}

}  // namespace stablenash
