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

#include "support/oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stablenash/supports.h"

namespace stablenash::testing {

std::optional<std::vector<double>> SolveLinearSystem(
    std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-12) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

namespace {

struct Row {
  std::vector<double> a;
  lp::Relation rel;
  double b;
};

bool Satisfies(const Row& r, const std::vector<double>& x, double tol) {
  double lhs = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) lhs += r.a[i] * x[i];
  switch (r.rel) {
    case lp::Relation::kLessEqual:
      return lhs <= r.b + tol;
    case lp::Relation::kGreaterEqual:
      return lhs >= r.b - tol;
    case lp::Relation::kEqual:
      return std::abs(lhs - r.b) <= tol;
  }
  return false;
}

}  // namespace

BruteLpResult BruteForceLp(const lp::LinearProgram& prog) {
  const std::size_t n = prog.num_vars();
  std::vector<Row> rows;
  for (const auto& c : prog.constraints()) rows.push_back({c.coeffs, c.relation, c.rhs});
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<double> unit(n, 0.0);
    unit[v] = 1.0;
    if (std::isfinite(prog.lower(v)))
      rows.push_back({unit, lp::Relation::kGreaterEqual, prog.lower(v)});
    if (std::isfinite(prog.upper(v)))
      rows.push_back({unit, lp::Relation::kLessEqual, prog.upper(v)});
  }
  std::vector<std::size_t> eq;
  std::vector<std::size_t> ineq;
  for (std::size_t i = 0; i < rows.size(); ++i)
    (rows[i].rel == lp::Relation::kEqual ? eq : ineq).push_back(i);

  BruteLpResult best;
  const bool maximize = prog.sense() != lp::Sense::kMinimize;
  auto consider = [&](const std::vector<std::size_t>& active) {
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (std::size_t i : eq) {
      a.push_back(rows[i].a);
      b.push_back(rows[i].b);
    }
    for (std::size_t i : active) {
      a.push_back(rows[i].a);
      b.push_back(rows[i].b);
    }
    auto x = SolveLinearSystem(a, b);
    if (!x) return;
    for (const Row& r : rows)
      if (!Satisfies(r, *x, 1e-9)) return;
    double value = 0.0;
    if (prog.sense() != lp::Sense::kFeasibility)
      for (std::size_t i = 0; i < n; ++i) value += prog.objective()[i] * (*x)[i];
    if (!best.feasible || (maximize ? value > best.value : value < best.value)) {
      best = {true, value, *x};
    }
  };
  if (eq.size() > n) return best;
  const std::size_t need = n - eq.size();
  if (need == 0) {
    consider({});
    return best;
  }
  for (const ActionSet& pick : SubsetsOfSize(ineq.size(), need)) {
    std::vector<std::size_t> active;
    for (std::size_t k : pick) active.push_back(ineq[k]);
    consider(active);
  }
  return best;
}

namespace {

// Mix over `mixed` making every action in `indiff` earn the same against it
// under `payoff` (rows = indifferent player's actions). Returns the full
// mix and the common value.
std::optional<std::pair<std::vector<double>, double>> Indifference(
    const Matrix& payoff, const ActionSet& indiff, const ActionSet& mixed) {
  const std::size_t k = mixed.size();
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (std::size_t i : indiff) {
    std::vector<double> row(k + 1);
    for (std::size_t c = 0; c < k; ++c) row[c] = payoff(i, mixed[c]);
    row[k] = -1.0;
    a.push_back(row);
    b.push_back(0.0);
  }
  std::vector<double> ones(k + 1, 1.0);
  ones[k] = 0.0;
  a.push_back(ones);
  b.push_back(1.0);
  auto x = SolveLinearSystem(a, b);
  if (!x) return std::nullopt;
  std::vector<double> full(payoff.cols(), 0.0);
  for (std::size_t c = 0; c < k; ++c) {
    if ((*x)[c] < -1e-12) return std::nullopt;
    full[mixed[c]] = std::max(0.0, (*x)[c]);
  }
  return std::make_pair(full, (*x)[k]);
}

}  // namespace

std::vector<StrategyProfile> EqualSupportEquilibria(const BimatrixGame& game) {
  std::vector<StrategyProfile> out;
  const Matrix& r = game.row_payoffs();
  const Matrix ct = game.col_payoffs().Transposed();
  for (std::size_t k = 1; k <= std::min(game.rows(), game.cols()); ++k) {
    for (const ActionSet& sr : SubsetsOfSize(game.rows(), k)) {
      for (const ActionSet& sc : SubsetsOfSize(game.cols(), k)) {
        auto q = Indifference(r, sr, sc);
        auto p = Indifference(ct, sc, sr);
        if (!q || !p) continue;
        // Best-response check against all pure deviations.
        bool ok = true;
        for (std::size_t i = 0; i < game.rows() && ok; ++i) {
          double v = 0.0;
          for (std::size_t j = 0; j < game.cols(); ++j) v += r(i, j) * q->first[j];
          ok = v <= q->second + 1e-9;
        }
        for (std::size_t j = 0; j < game.cols() && ok; ++j) {
          double v = 0.0;
          for (std::size_t i = 0; i < game.rows(); ++i) v += ct(j, i) * p->first[i];
          ok = v <= p->second + 1e-9;
        }
        if (!ok) continue;
        StrategyProfile prof{MixedStrategy(p->first), MixedStrategy(q->first)};
        if (!ContainsProfile(out, prof, 1e-6)) out.push_back(prof);
      }
    }
  }
  return out;
}

double NaiveRowRegret(const BimatrixGame& game, const StrategyProfile& s) {
  double best = -std::numeric_limits<double>::infinity();
  double got = 0.0;
  for (std::size_t i = 0; i < game.rows(); ++i) {
    double v = 0.0;
    for (std::size_t j = 0; j < game.cols(); ++j)
      v += game.row_payoffs()(i, j) * s.col[j];
    best = std::max(best, v);
    got += s.row[i] * v;
  }
  return std::max(0.0, best - got);
}

double NaiveColRegret(const BimatrixGame& game, const StrategyProfile& s) {
  double best = -std::numeric_limits<double>::infinity();
  double got = 0.0;
  for (std::size_t j = 0; j < game.cols(); ++j) {
    double v = 0.0;
    for (std::size_t i = 0; i < game.rows(); ++i)
      v += game.col_payoffs()(i, j) * s.row[i];
    best = std::max(best, v);
    got += s.col[j] * v;
  }
  return std::max(0.0, best - got);
}

double NaiveWsGap(const BimatrixGame& game, const StrategyProfile& s) {
  double gap = 0.0;
  std::vector<double> rv(game.rows(), 0.0);
  std::vector<double> cv(game.cols(), 0.0);
  for (std::size_t i = 0; i < game.rows(); ++i)
    for (std::size_t j = 0; j < game.cols(); ++j) {
      rv[i] += game.row_payoffs()(i, j) * s.col[j];
      cv[j] += game.col_payoffs()(i, j) * s.row[i];
    }
  const double rmax = *std::max_element(rv.begin(), rv.end());
  const double cmax = *std::max_element(cv.begin(), cv.end());
  for (std::size_t i = 0; i < game.rows(); ++i)
    if (s.row[i] > 1e-9) gap = std::max(gap, rmax - rv[i]);
  for (std::size_t j = 0; j < game.cols(); ++j)
    if (s.col[j] > 1e-9) gap = std::max(gap, cmax - cv[j]);
  return gap;
}

double GridMaxDistance2(const std::function<bool(double)>& keep,
                        double anchor_first, int steps) {
  double best = -1.0;
  for (int k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) / steps;
    if (keep(t)) best = std::max(best, std::abs(t - anchor_first));
  }
  return best;
}

bool ContainsProfile(const std::vector<StrategyProfile>& set,
                     const StrategyProfile& profile, double tol) {
  for (const auto& s : set)
    if (ProfileDistance(s, profile) <= tol) return true;
  return false;
}

}  // namespace stablenash::testing
