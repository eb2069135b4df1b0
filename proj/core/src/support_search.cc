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

#include "stablenash/support_search.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "stablenash/errors.h"
#include "stablenash/lp.h"
#include "stablenash/random.h"

namespace stablenash {

namespace {

void CheckActions(const ActionSet& set, std::size_t n, const char* who) {
  if (set.empty()) {
    throw DomainError(std::string(who) + " support is empty");
  }
  for (std::size_t a : set) {
    if (a >= n) {
      std::ostringstream msg;
      msg << who << " support names action " << a << " of " << n;
      throw ShapeError(msg.str());
    }
  }
}

// Mix x over `mixed` (columns of `payoff`) maximizing s subject to
//   payoff[i] . x >= payoff[j] . x - eps + s   for i in `responders`, all j.
std::optional<std::vector<double>> SlackMix(const Matrix& payoff,
                                            const ActionSet& responders,
                                            const ActionSet& mixed, double eps,
                                            const Tolerances& tol) {
  const std::size_t k = mixed.size();
  lp::LinearProgram prog(k + 1);
  std::vector<double> ones(k + 1, 1.0);
  ones[k] = 0.0;
  prog.AddConstraint(std::move(ones), lp::Relation::kEqual, 1.0);
  for (std::size_t i : responders) {
    for (std::size_t j = 0; j < payoff.rows(); ++j) {
      if (j == i) continue;
      std::vector<double> row(k + 1, 0.0);
      for (std::size_t c = 0; c < k; ++c)
        row[c] = payoff(i, mixed[c]) - payoff(j, mixed[c]);
      row[k] = -1.0;
      prog.AddConstraint(std::move(row), lp::Relation::kGreaterEqual, -eps);
    }
  }
  // The cap keeps the LP bounded when there is a single action.
  prog.SetBounds(k, -lp::kInfinity, 1.0);
  std::vector<double> obj(k + 1, 0.0);
  obj[k] = 1.0;
  prog.SetObjective(std::move(obj), lp::Sense::kMaximize);

  const lp::Outcome out = lp::SolveLp(prog, tol.lp);
  if (!out.has_solution() || out.solution[k] < -tol.lp) return std::nullopt;
  std::vector<double> full(payoff.cols(), 0.0);
  for (std::size_t c = 0; c < k; ++c)
    full[mixed[c]] = std::max(0.0, out.solution[c]);
  return full;
}

}  // namespace

std::optional<StrategyProfile> WellSupportedFeasible(
    const BimatrixGame& game, const ActionSet& row_support,
    const ActionSet& col_support, double eps, const Tolerances& tol) {
  if (!(eps >= 0.0) || !std::isfinite(eps))
    throw ParameterError("eps must be a finite non-negative number");
  CheckActions(row_support, game.rows(), "row");
  CheckActions(col_support, game.cols(), "column");

  auto q = SlackMix(game.row_payoffs(), row_support, col_support, eps, tol);
  if (!q) return std::nullopt;
  auto p = SlackMix(game.col_payoffs().Transposed(), col_support, row_support,
                    eps, tol);
  if (!p) return std::nullopt;

  StrategyProfile profile =
      StrategyProfile{MixedStrategy(std::move(*p), tol),
                      MixedStrategy(std::move(*q), tol)}
          .Cleaned(tol.zero);
  if (ComputeRegrets(game, profile, tol).max_ws_gap() > eps + tol.eq)
    return std::nullopt;
  return profile;
}

std::optional<SearchResult> FindWellSupported(const BimatrixGame& game,
                                              double eps,
                                              std::size_t max_support,
                                              std::uint64_t budget,
                                              const Tolerances& tol) {
  if (max_support == 0)
    throw ParameterError("max_support must be at least 1");
  if (!(eps >= 0.0) || !std::isfinite(eps))
    throw ParameterError("eps must be a finite non-negative number");

  std::optional<SearchResult> found;
  std::uint64_t tried = 0;
  ForEachSupportPair(
      game.rows(), game.cols(), max_support,
      [&](const ActionSet& sr, const ActionSet& sc) {
        if (tried == budget) {
          std::ostringstream msg;
          msg << "well-supported search exceeded its budget of " << budget
              << " support pairs";
          throw ResourceError(msg.str());
        }
        ++tried;
        auto profile = WellSupportedFeasible(game, sr, sc, eps, tol);
        if (!profile) return true;
        found = SearchResult{*profile, sr, sc, tried, eps,
                             ComputeRegrets(game, *profile, tol)};
        return false;
      });
  return found;
}

HeavyLightSplit HeavyLightPartition(const MixedStrategy& p, double s,
                                    double delta, const Tolerances& tol) {
  if (!(s > 0.0) || !std::isfinite(s))
    throw ParameterError("S must be a positive finite number");
  if (!(delta > 0.0 && delta <= 0.125))
    throw ParameterError("delta must lie in (0, 1/8]");

  std::vector<std::size_t> order = p.Support(tol.zero);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });

  HeavyLightSplit split;
  std::size_t moved = 0;
  for (;;) {
    double heavy = 0.0;
    double light = 0.0;
    for (std::size_t i = 0; i < order.size(); ++i)
      (i < moved ? heavy : light) += p[order[i]];
    split.heavy_mass = heavy;
    split.light_mass = light;
    split.light_threshold = light / s;

    if (heavy >= 1.0 - 8.0 * delta - tol.zero) {
      split.rule = SplitRule::kHeavyDominates;
      break;
    }
    // The largest light entry decides the spread rule.
    if (moved < order.size() &&
        p[order[moved]] <= split.light_threshold + tol.zero) {
      split.rule = SplitRule::kLightIsSpread;
      break;
    }
    ++moved;
  }
  split.heavy.assign(order.begin(), order.begin() + moved);
  split.light.assign(order.begin() + moved, order.end());
  std::sort(split.heavy.begin(), split.heavy.end());
  std::sort(split.light.begin(), split.light.end());
  return split;
}

MixedStrategy EmpiricalSample(const MixedStrategy& p, std::size_t k,
                              std::uint64_t seed) {
  if (k == 0) throw ParameterError("sample size must be at least 1");
  std::vector<double> cdf(p.size());
  std::partial_sum(p.probs().begin(), p.probs().end(), cdf.begin());
  // The last nonzero action absorbs rounding in the cumulative sum.
  std::size_t last = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) last = i;

  Rng rng(seed);
  std::vector<std::size_t> counts(p.size(), 0);
  for (std::size_t draw = 0; draw < k; ++draw) {
    const double u = rng.Unit() * cdf.back();
    std::size_t a = static_cast<std::size_t>(
        std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    ++counts[std::min(a, last)];
  }
  std::vector<double> probs(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    probs[i] = static_cast<double>(counts[i]) / static_cast<double>(k);
  return MixedStrategy(std::move(probs));
}

double SupportSizeBound(double c, double delta, double eps, std::size_t n) {
  if (!(c > 0.0) || !(delta > 0.0) || !(eps > 0.0))
    throw ParameterError("support bound needs c, delta, eps > 0");
  const double ratio = delta / eps;
  const double bound =
      c * ratio * ratio * std::log(static_cast<double>(std::max<std::size_t>(n, 1)));
  return std::max(1.0, bound);
}

namespace {

MixedStrategy CompressOne(const MixedStrategy& p, const HeavyLightSplit& split,
                          std::size_t k, std::uint64_t seed,
                          const Tolerances& tol) {
  if (split.light.empty() || split.light_mass <= 0.0) return p;
  std::vector<double> light(p.size(), 0.0);
  for (std::size_t i : split.light) light[i] = p[i] / split.light_mass;
  const MixedStrategy sample =
      EmpiricalSample(MixedStrategy(light, tol), k, seed);

  std::vector<double> out(p.size(), 0.0);
  for (std::size_t i : split.heavy) out[i] = p[i];
  const double heavy = split.heavy_mass;
  for (std::size_t i = 0; i < p.size(); ++i)
    out[i] += (1.0 - heavy) * sample[i];
  return MixedStrategy(std::move(out), tol);
}

}  // namespace

CompressionResult SmallSupportApproximation(const BimatrixGame& game,
                                            const StrategyProfile& equilibrium,
                                            double eps, double delta,
                                            std::uint64_t seed,
                                            double support_constant,
                                            const Tolerances& tol) {
  CheckProfileShape(game, equilibrium);
  if (!(eps > 0.0 && eps <= delta))
    throw ParameterError("compression needs 0 < eps <= delta");
  CompressionResult result{equilibrium, {}, {}, 0.0, 0, {}};
  const std::size_t n = std::max(game.rows(), game.cols());
  result.support_bound = SupportSizeBound(support_constant, delta, eps, n);
  result.sample_size =
      static_cast<std::size_t>(std::ceil(result.support_bound));

  result.row_split =
      HeavyLightPartition(equilibrium.row, result.support_bound, delta, tol);
  result.col_split =
      HeavyLightPartition(equilibrium.col, result.support_bound, delta, tol);
  result.profile = StrategyProfile{
      CompressOne(equilibrium.row, result.row_split, result.sample_size,
                  Rng::ForStream(seed, 0).Next(), tol),
      CompressOne(equilibrium.col, result.col_split, result.sample_size,
                  Rng::ForStream(seed, 1).Next(), tol)};
  result.regrets = ComputeRegrets(game, result.profile, tol);
  return result;
}

}  // namespace stablenash
