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

#include "stablenash/stability.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "stablenash/errors.h"
#include "stablenash/lp.h"
#include "stablenash/random.h"

namespace stablenash {

const char* StabilityModeName(StabilityMode mode) {
  switch (mode) {
    case StabilityMode::kPerturbation:
      return "perturbation";
    case StabilityMode::kApproximation:
      return "approximation";
    case StabilityMode::kWellSupported:
      return "well_supported";
  }
  return "unknown";
}

namespace {

void CheckEps(double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps))
    throw ParameterError("eps must be a finite non-negative number");
}

// Keeps the first profile at the largest distance.
class WitnessTracker {
 public:
  void Offer(const StrategyProfile& profile, double distance,
             const std::string& origin,
             const std::optional<BimatrixGame>& game = std::nullopt) {
    ++examined_;
    if (!best_ || distance > best_->distance) {
      best_ = StabilityWitness{profile, distance, game, origin};
    }
  }

  StabilityReport Finish(double eps, StabilityMode mode, std::size_t trials,
                         bool complete) const {
    StabilityReport report;
    report.epsilon = eps;
    report.mode = mode;
    report.trials = trials;
    report.profiles_examined = examined_;
    report.reference_complete = complete;
    if (best_) {
      report.delta_hat = std::clamp(best_->distance, 0.0, 1.0);
      report.witnesses.push_back(*best_);
    }
    return report;
  }

 private:
  std::optional<StabilityWitness> best_;
  std::size_t examined_ = 0;
};

std::string Label(const char* what, char matrix, std::size_t a,
                  std::size_t b, bool two, double sign) {
  std::ostringstream out;
  out << "battery:" << matrix << '-' << what;
  if (two) {
    out << '(' << a << ',' << b << ')';
  } else if (a != static_cast<std::size_t>(-1)) {
    out << '(' << a << ')';
  }
  out << (sign > 0 ? '+' : '-');
  return out.str();
}

// Probability vector from LP output: negatives clamped, renormalized.
MixedStrategy Normalized(std::vector<double> x, const Tolerances& tol) {
  double sum = 0.0;
  for (double& v : x) {
    v = std::max(0.0, v);
    sum += v;
  }
  if (!(sum > 0.0)) throw NumericalError("LP returned a zero strategy");
  for (double& v : x) v /= sum;
  return MixedStrategy(std::move(x), tol);
}

MixedStrategy RandomSparseStrategy(std::size_t n, Rng& rng) {
  const std::size_t k = 1 + static_cast<std::size_t>(rng.Below(n));
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.Below(n - i));
    std::swap(idx[i], idx[j]);
  }
  std::vector<double> w(n, 0.0);
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    w[idx[i]] = rng.Exponential() + 1e-12;
    sum += w[idx[i]];
  }
  for (double& v : w) v /= sum;
  return MixedStrategy(std::move(w));
}

MixedStrategy Blend(const MixedStrategy& from, const MixedStrategy& to,
                    double t) {
  std::vector<double> out(from.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (1.0 - t) * from[i] + t * to[i];
  return MixedStrategy(std::move(out));
}

// Restricts `x` to actions whose payoff is within eps of the best. Returns
// nullopt if no supported action survives, or x itself when nothing moves.
std::optional<MixedStrategy> PruneStrategy(const MixedStrategy& x,
                                           const std::vector<double>& payoff,
                                           double eps, const Tolerances& tol,
                                           bool* changed) {
  const double best = *std::max_element(payoff.begin(), payoff.end());
  std::vector<double> kept(x.size(), 0.0);
  double mass = 0.0;
  bool dropped = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= tol.zero) continue;
    if (payoff[i] >= best - eps) {
      kept[i] = x[i];
      mass += x[i];
    } else {
      dropped = true;
    }
  }
  if (!dropped) return x;
  if (mass <= 0.0) return std::nullopt;
  for (double& v : kept) v /= mass;
  *changed = true;
  return MixedStrategy(std::move(kept), tol);
}

constexpr int kPruneRounds = 8;

std::optional<StrategyProfile> Qualify(const BimatrixGame& game,
                                       const StrategyProfile& x, double eps,
                                       ApproximationKind kind,
                                       const Tolerances& tol) {
  if (kind == ApproximationKind::kPlain) {
    if (ComputeRegrets(game, x, tol).max_regret() <= eps) return x;
    return std::nullopt;
  }
  StrategyProfile cur = x;
  for (int round = 0; round < kPruneRounds; ++round) {
    bool changed = false;
    auto row = PruneStrategy(cur.row, RowActionPayoffs(game, cur.col), eps,
                             tol, &changed);
    if (!row) return std::nullopt;
    cur.row = *row;
    auto col = PruneStrategy(cur.col, ColActionPayoffs(game, cur.row), eps,
                             tol, &changed);
    if (!col) return std::nullopt;
    cur.col = *col;
    if (!changed) break;
  }
  if (ComputeRegrets(game, cur, tol).max_ws_gap() <= eps) return cur;
  return std::nullopt;
}

// Distance-maximizing LPs around one anchor with the opponent held fixed.
// `own(i, j)` is the moving player's payoff for own action i against the
// opponent's action j; `other(i, j)` the opponent's payoff for the same
// action pair.
std::vector<MixedStrategy> SweepOneSide(
    const Matrix& own, const Matrix& other, const MixedStrategy& anchor,
    const MixedStrategy& fixed, double eps, ApproximationKind kind,
    std::uint64_t seed, const StabilityOptions& options) {
  const Tolerances& tol = options.enumeration.tol;
  const std::size_t n = own.rows();
  const std::size_t m = own.cols();
  const std::vector<double> u = own.Times(fixed.probs());
  const std::vector<double> w = other.Times(fixed.probs());
  const double umax = *std::max_element(u.begin(), u.end());

  lp::LinearProgram base(n);
  base.AddConstraint(std::vector<double>(n, 1.0), lp::Relation::kEqual, 1.0);
  if (kind == ApproximationKind::kPlain) {
    base.AddConstraint(u, lp::Relation::kGreaterEqual, umax - eps);
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<double> row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = other(i, j) - w[i];
      base.AddConstraint(std::move(row), lp::Relation::kLessEqual, eps);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      if (u[i] < umax - eps) base.SetBounds(i, 0.0, 0.0);
    for (std::size_t j : fixed.Support(tol.zero)) {
      for (std::size_t l = 0; l < m; ++l) {
        if (l == j) continue;
        std::vector<double> row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = other(i, l) - other(i, j);
        base.AddConstraint(std::move(row), lp::Relation::kLessEqual, eps);
      }
    }
  }

  const std::vector<std::size_t> supp = anchor.Support(tol.zero);
  const std::size_t bits = supp.size();
  std::vector<std::uint64_t> masks;
  if (bits <= options.max_partition_bits) {
    masks.resize(std::size_t{1} << bits);
    std::iota(masks.begin(), masks.end(), std::uint64_t{0});
  } else {
    Rng rng(seed);
    masks.resize(std::size_t{1} << options.max_partition_bits);
    for (auto& mask : masks) {
      mask = 0;
      for (std::size_t b = 0; b < bits && b < 64; ++b)
        if (rng.Coin()) mask |= std::uint64_t{1} << b;
    }
  }

  std::vector<MixedStrategy> out;
  for (std::uint64_t mask : masks) {
    lp::LinearProgram prog = base;
    std::vector<double> obj(n, 1.0);
    for (std::size_t b = 0; b < bits; ++b) {
      const std::size_t i = supp[b];
      const bool plus = b < 64 && ((mask >> b) & 1u);
      obj[i] = plus ? 1.0 : -1.0;
      prog.AddBound(i, plus ? lp::Relation::kGreaterEqual
                            : lp::Relation::kLessEqual,
                    anchor[i]);
    }
    prog.SetObjective(std::move(obj), lp::Sense::kMaximize);
    const lp::Outcome res = lp::SolveLp(prog, tol.lp);
    if (!res.has_solution()) continue;
    out.push_back(Normalized(res.solution, tol));
  }
  return out;
}

}  // namespace

std::vector<LabeledGame> PerturbationBattery(const BimatrixGame& game,
                                             double eps) {
  CheckEps(eps);
  const std::size_t rows = game.rows();
  const std::size_t cols = game.cols();
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<LabeledGame> out;

  auto emit = [&](char which, const Matrix& changed, std::string label) {
    if (which == 'R') {
      out.push_back({std::move(label),
                     BimatrixGame(changed, game.col_payoffs(),
                                  game.nominal_range())});
    } else {
      out.push_back({std::move(label),
                     BimatrixGame(game.row_payoffs(), changed,
                                  game.nominal_range())});
    }
  };

  for (char which : {'R', 'C'}) {
    const Matrix& m =
        which == 'R' ? game.row_payoffs() : game.col_payoffs();
    for (double sign : {1.0, -1.0}) {
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          Matrix c = m;
          c(i, j) += sign * eps;
          emit(which, c, Label("entry", which, i, j, true, sign));
        }
      }
    }
    for (double sign : {1.0, -1.0}) {
      for (std::size_t i = 0; i < rows; ++i) {
        Matrix c = m;
        for (std::size_t j = 0; j < cols; ++j) c(i, j) += sign * eps;
        emit(which, c, Label("row", which, i, 0, false, sign));
      }
      for (std::size_t j = 0; j < cols; ++j) {
        Matrix c = m;
        for (std::size_t i = 0; i < rows; ++i) c(i, j) += sign * eps;
        emit(which, c, Label("col", which, j, 0, false, sign));
      }
      Matrix c = m;
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) c(i, j) += sign * eps;
      emit(which, c, Label("all", which, none, 0, false, sign));
    }
  }
  return out;
}

BimatrixGame RandomPerturbation(const BimatrixGame& game, double eps,
                                std::uint64_t seed) {
  CheckEps(eps);
  Rng rng(seed);
  Matrix r = game.row_payoffs();
  Matrix c = game.col_payoffs();
  for (std::size_t i = 0; i < game.rows(); ++i)
    for (std::size_t j = 0; j < game.cols(); ++j)
      r(i, j) += rng.Uniform(-eps, eps);
  for (std::size_t i = 0; i < game.rows(); ++i)
    for (std::size_t j = 0; j < game.cols(); ++j)
      c(i, j) += rng.Uniform(-eps, eps);
  return BimatrixGame(std::move(r), std::move(c), game.nominal_range());
}

StabilityReport EstimatePerturbationStability(const BimatrixGame& game,
                                              double eps, std::size_t trials,
                                              std::uint64_t seed,
                                              const StabilityOptions& options) {
  CheckEps(eps);
  const EquilibriumSet reference =
      EnumerateEquilibria(game, options.enumeration);
  WitnessTracker tracker;

  auto consider = [&](const BimatrixGame& perturbed,
                      const std::string& origin) {
    const EquilibriumSet found =
        EnumerateEquilibria(perturbed, options.enumeration);
    for (std::size_t k = 0; k < found.equilibria.size(); ++k) {
      const StrategyProfile& e = found.equilibria[k];
      tracker.Offer(e, DistanceToSet(e, reference),
                    origin + "/eq" + std::to_string(k), perturbed);
    }
  };

  if (eps == 0.0) {
    consider(game, "unperturbed");
  } else {
    if (options.use_battery) {
      for (const LabeledGame& g : PerturbationBattery(game, eps))
        consider(g.game, g.label);
    }
    for (std::size_t t = 0; t < trials; ++t) {
      consider(RandomPerturbation(game, eps, Rng::ForStream(seed, t).Next()),
               "random:" + std::to_string(t));
    }
  }
  return tracker.Finish(eps, StabilityMode::kPerturbation, trials,
                        reference.complete);
}

std::vector<StrategyProfile> SampleApproximateEquilibria(
    const BimatrixGame& game, std::span<const StrategyProfile> anchors,
    double eps, ApproximationKind kind, std::size_t count, std::uint64_t seed,
    const StabilityOptions& options) {
  CheckEps(eps);
  if (anchors.empty())
    throw PreconditionError("sampling needs at least one anchor profile");
  const Tolerances& tol = options.enumeration.tol;

  std::vector<StrategyProfile> out;
  out.reserve(count);
  const std::size_t max_attempts = 4 * count + 16;
  for (std::size_t attempt = 0; out.size() < count && attempt < max_attempts;
       ++attempt) {
    Rng rng = Rng::ForStream(seed, attempt);
    const StrategyProfile start{RandomSparseStrategy(game.rows(), rng),
                                RandomSparseStrategy(game.cols(), rng)};
    const StrategyProfile& anchor =
        anchors[static_cast<std::size_t>(rng.Below(anchors.size()))];
    if (auto ok = Qualify(game, start, eps, kind, tol)) {
      out.push_back(std::move(*ok));
      continue;
    }
    auto best = Qualify(game, anchor, eps, kind, tol);
    if (!best) continue;
    double lo = 0.0;
    double hi = 1.0;
    for (std::size_t step = 0; step < options.repair_steps; ++step) {
      const double mid = 0.5 * (lo + hi);
      const StrategyProfile blended{Blend(start.row, anchor.row, mid),
                                    Blend(start.col, anchor.col, mid)};
      if (auto ok = Qualify(game, blended, eps, kind, tol)) {
        hi = mid;
        best = std::move(ok);
      } else {
        lo = mid;
      }
    }
    out.push_back(std::move(*best));
  }
  return out;
}

StabilityReport EstimateApproximationStability(const BimatrixGame& game,
                                               double eps,
                                               ApproximationKind kind,
                                               std::size_t trials,
                                               std::uint64_t seed,
                                               const StabilityOptions& options) {
  CheckEps(eps);
  const Tolerances& tol = options.enumeration.tol;
  const EquilibriumSet reference =
      EnumerateEquilibria(game, options.enumeration);
  const std::span<const StrategyProfile> eqs(reference.equilibria);
  WitnessTracker tracker;

  const auto samples = SampleApproximateEquilibria(
      game, eqs, eps, kind, trials, Rng::ForStream(seed, 0).Next(), options);
  for (std::size_t k = 0; k < samples.size(); ++k) {
    tracker.Offer(samples[k], DistanceToSet(samples[k], eqs),
                  "sample:" + std::to_string(k));
  }

  const Matrix& r = game.row_payoffs();
  const Matrix& c = game.col_payoffs();
  const Matrix rt = r.Transposed();
  const Matrix ct = c.Transposed();
  for (std::size_t a = 0; a < eqs.size(); ++a) {
    const StrategyProfile& e = eqs[a];
    for (int side = 0; side < 2; ++side) {
      const bool row_moves = side == 0;
      const auto moved = SweepOneSide(
          row_moves ? r : ct, row_moves ? c : rt, row_moves ? e.row : e.col,
          row_moves ? e.col : e.row, eps, kind,
          Rng::ForStream(seed, 1 + 2 * a + side).Next(), options);
      for (std::size_t k = 0; k < moved.size(); ++k) {
        StrategyProfile cand = row_moves ? StrategyProfile{moved[k], e.col}
                                         : StrategyProfile{e.row, moved[k]};
        const RegretReport rep = ComputeRegrets(game, cand, tol);
        const double gap = kind == ApproximationKind::kPlain
                               ? rep.max_regret()
                               : rep.max_ws_gap();
        if (gap > eps + tol.eq) continue;
        std::ostringstream origin;
        origin << "lp:eq" << a << (row_moves ? "/row/" : "/col/") << k;
        tracker.Offer(cand, DistanceToSet(cand, eqs), origin.str());
      }
    }
  }
  return tracker.Finish(eps,
                        kind == ApproximationKind::kPlain
                            ? StabilityMode::kApproximation
                            : StabilityMode::kWellSupported,
                        trials, reference.complete);
}

BimatrixGame PerturbationWitness(const BimatrixGame& game,
                                 const StrategyProfile& profile, double eps,
                                 const Tolerances& tol) {
  CheckEps(eps);
  CheckProfileShape(game, profile);
  const RegretReport rep = ComputeRegrets(game, profile, tol);
  if (rep.max_ws_gap() > 2.0 * eps + tol.eq) {
    std::ostringstream msg;
    msg << "profile has well-supported gap " << rep.max_ws_gap()
        << ", above 2*eps = " << 2.0 * eps;
    throw PreconditionError(msg.str());
  }

  // Shift for one player: supported actions land exactly at best - eps,
  // unsupported ones are lowered to at most best - eps.
  auto shifts = [&](const std::vector<double>& payoff,
                    const MixedStrategy& x) {
    const double best = *std::max_element(payoff.begin(), payoff.end());
    std::vector<double> s(payoff.size());
    for (std::size_t i = 0; i < payoff.size(); ++i) {
      const double target = best - eps - payoff[i];
      s[i] = x[i] > tol.zero ? target : std::min(0.0, target);
      s[i] = std::clamp(s[i], -eps, eps);
    }
    return s;
  };
  const auto row_shift = shifts(RowActionPayoffs(game, profile.col),
                                profile.row);
  const auto col_shift = shifts(ColActionPayoffs(game, profile.row),
                                profile.col);

  Matrix r = game.row_payoffs();
  Matrix c = game.col_payoffs();
  for (std::size_t i = 0; i < game.rows(); ++i) {
    for (std::size_t j = 0; j < game.cols(); ++j) {
      r(i, j) += row_shift[i];
      c(i, j) += col_shift[j];
    }
  }
  return BimatrixGame(std::move(r), std::move(c), game.nominal_range());
}

StrategyProfile InternalDeviation(const BimatrixGame& game,
                                  const StrategyProfile& profile, double alpha,
                                  const Tolerances& tol) {
  CheckProfileShape(game, profile);
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw ParameterError("alpha must be a finite non-negative number");
  if (ComputeRegrets(game, profile, tol).max_regret() > tol.eq)
    throw PreconditionError("internal deviation needs an exact equilibrium");
  const std::vector<std::size_t> supp = profile.row.Support(tol.zero);
  if (supp.size() < 2)
    throw DomainError("row strategy is pure; no internal deviation exists");

  const std::size_t receiver = supp.front();
  const double movable = 1.0 - profile.row[receiver];
  if (alpha > movable + tol.zero) {
    std::ostringstream msg;
    msg << "alpha " << alpha << " exceeds the movable mass " << movable;
    throw ParameterError(msg.str());
  }
  if (alpha == 0.0) return profile;

  std::vector<double> p = profile.row.probs();
  double remaining = std::min(alpha, movable);
  p[receiver] += remaining;
  for (auto it = supp.rbegin(); it != supp.rend() && remaining > 0.0; ++it) {
    if (*it == receiver) continue;
    const double take = std::min(p[*it], remaining);
    p[*it] -= take;
    remaining -= take;
  }
  StrategyProfile out{MixedStrategy(std::move(p), tol), profile.col};
  if (ComputeRegrets(game, out, tol).max_ws_gap() > 2.0 * alpha + tol.eq)
    throw CertificateError(
        "deviation is not a well-supported 2*alpha equilibrium; payoffs "
        "outside [0, 1]?");
  return out;
}

MixedStrategy RandomSplitDeviation(const MixedStrategy& p,
                                   const HeavyLightSplit& split, double delta,
                                   std::uint64_t seed, const Tolerances& tol) {
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw ParameterError("delta must be a positive finite number");
  if (split.light.empty())
    throw PreconditionError("split has no light actions");
  for (std::size_t i : split.light)
    if (i >= p.size()) throw ShapeError("split does not match the strategy");
  if (split.light_mass < 8.0 * delta - tol.zero) {
    std::ostringstream msg;
    msg << "light mass " << split.light_mass << " is below 8*delta = "
        << 8.0 * delta;
    throw PreconditionError(msg.str());
  }

  const double shift = 3.0 * delta;
  for (std::size_t attempt = 0; attempt < kSplitRetries; ++attempt) {
    Rng rng = Rng::ForStream(seed, attempt);
    std::vector<bool> up(split.light.size());
    double gain = 0.0;
    double lose = 0.0;
    for (std::size_t k = 0; k < split.light.size(); ++k) {
      up[k] = rng.Coin();
      (up[k] ? gain : lose) += p[split.light[k]];
    }
    // Losers must be able to give up 3*delta without going negative.
    if (gain <= 0.0 || lose < shift) continue;
    std::vector<double> out = p.probs();
    for (std::size_t k = 0; k < split.light.size(); ++k) {
      const std::size_t i = split.light[k];
      out[i] = up[k] ? p[i] + shift * p[i] / gain
                     : p[i] - shift * p[i] / lose;
    }
    return MixedStrategy(std::move(out), tol);
  }
  std::ostringstream msg;
  msg << "no usable coin split after " << kSplitRetries
      << " draws; the light part is too small";
  throw DegenerateInputError(msg.str());
}

ProbeReport ConcentrationProbe(const BimatrixGame& game, double eps,
                               double delta, std::uint64_t seed,
                               const ProbeOptions& options) {
  const Tolerances& tol = options.enumeration.tol;
  const EquilibriumSet reference =
      EnumerateEquilibria(game, options.enumeration);
  ProbeReport report;
  report.epsilon = eps;
  report.delta = delta;
  report.support_bound =
      SupportSizeBound(options.support_constant, delta, eps,
                       std::max(game.rows(), game.cols()));

  for (std::size_t k = 0; k < reference.equilibria.size(); ++k) {
    const StrategyProfile& e = reference.equilibria[k];
    for (int side = 0; side < 2; ++side) {
      const MixedStrategy& x = side == 0 ? e.row : e.col;
      ProbeEntry entry;
      entry.equilibrium = k;
      entry.player = side == 0 ? Player::kRow : Player::kCol;
      entry.split = HeavyLightPartition(x, report.support_bound, delta, tol);
      entry.applicable = entry.split.rule == SplitRule::kLightIsSpread &&
                         entry.split.light.size() >= 2 &&
                         entry.split.light_mass >= 8.0 * delta - tol.zero;
      if (entry.applicable) {
        for (std::size_t t = 0; t < options.deviations; ++t) {
          const std::uint64_t stream =
              (2 * k + static_cast<std::uint64_t>(side)) * options.deviations +
              t;
          MixedStrategy moved = x;
          try {
            moved = RandomSplitDeviation(
                x, entry.split, delta, Rng::ForStream(seed, stream).Next(),
                tol);
          } catch (const DegenerateInputError&) {
            continue;
          }
          const StrategyProfile dev = side == 0
                                          ? StrategyProfile{moved, e.col}
                                          : StrategyProfile{e.row, moved};
          ++entry.deviations;
          if (ComputeRegrets(game, dev, tol).max_ws_gap() <= eps)
            ++entry.well_supported;
          entry.max_distance = std::max(
              entry.max_distance, DistanceToSet(dev, reference));
        }
      }
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace stablenash
