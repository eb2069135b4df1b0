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

#include "stablenash/embedding.h"

#include <cmath>
#include <sstream>

#include "stablenash/errors.h"

namespace stablenash {

double EmbeddingDelta(double eps) { return std::pow(8.0 * eps, 0.25); }

namespace {

void CheckUnitEntries(const Matrix& m, const char* name) {
  for (double v : m.data()) {
    if (v < 0.0 || v > 1.0) {
      std::ostringstream msg;
      msg << name << " has entry " << v << " outside [0, 1]";
      throw ParameterError(msg.str());
    }
  }
}

// Writes the shared border: zero column / 2D corner for R, unit column /
// 2D bottom row for C.
void FillBorder(Matrix& r, Matrix& c, std::size_t n, double delta) {
  for (std::size_t i = 0; i < n; ++i) {
    r(i, n) = 0.0;
    r(n, i) = 0.0;
    c(i, n) = 1.0;
    c(n, i) = 2.0 * delta;
  }
  r(n, n) = 2.0 * delta;
  c(n, n) = 0.0;
}

MixedStrategy Leading(const MixedStrategy& x, std::size_t n, double mass,
                      const Tolerances& tol) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] / mass;
  return MixedStrategy(std::move(out), tol);
}

}  // namespace

EmbeddedGame Embed(const BimatrixGame& source, double eps) {
  if (!source.square()) throw ShapeError("embedding needs a square game");
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw ParameterError("eps must be a positive finite number");
  const double delta = EmbeddingDelta(eps);
  if (delta > kMaxEmbeddingDelta) {
    std::ostringstream msg;
    msg << "eps " << eps << " gives scale " << delta << ", above "
        << kMaxEmbeddingDelta;
    throw ParameterError(msg.str());
  }
  CheckUnitEntries(source.row_payoffs(), "R");
  CheckUnitEntries(source.col_payoffs(), "C");

  const std::size_t n = source.rows();
  Matrix r(n + 1, n + 1);
  Matrix c(n + 1, n + 1);
  const double half = delta / 2.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r(i, j) = 1.0 - half + half * source.row_payoffs()(i, j);
      c(i, j) = half + half * source.col_payoffs()(i, j);
    }
  }
  FillBorder(r, c, n, delta);
  return EmbeddedGame{BimatrixGame(std::move(r), std::move(c)), eps, delta, n,
                      delta <= kConcentrationDeltaLimit};
}

MassBounds ExactEquilibriumMassBounds(double delta) {
  return {2.0 * delta / (1.0 + 2.0 * delta), 2.0 * delta / (1.0 + delta)};
}

MassBounds ApproximateEquilibriumMassBounds(double delta) {
  return {delta / 2.0, 4.0 * delta};
}

double LeadingMass(const MixedStrategy& x, std::size_t n) {
  double mass = 0.0;
  for (std::size_t i = 0; i < n && i < x.size(); ++i) mass += x[i];
  return mass;
}

BimatrixGame RecoverSource(const EmbeddedGame& embedded) {
  const std::size_t n = embedded.source_shape;
  const double half = embedded.delta / 2.0;
  Matrix r(n, n);
  Matrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r(i, j) = (embedded.game.row_payoffs()(i, j) - 1.0 + half) / half;
      c(i, j) = (embedded.game.col_payoffs()(i, j) - half) / half;
    }
  }
  return BimatrixGame(std::move(r), std::move(c));
}

ExtractionResult Extract(const EmbeddedGame& embedded,
                         const StrategyProfile& profile,
                         const Tolerances& tol) {
  CheckProfileShape(embedded.game, profile);
  const std::size_t n = embedded.source_shape;
  const BimatrixGame source = RecoverSource(embedded);

  const double delta = embedded.delta;
  const double target = std::pow(delta, 4.0) / 8.0;
  const RegretReport embedded_regrets =
      ComputeRegrets(embedded.game, profile, tol);
  if (embedded_regrets.max_regret() > target + tol.eq) {
    std::ostringstream msg;
    msg << "profile has regret " << embedded_regrets.max_regret()
        << " in the embedded game, above " << target;
    throw CertificateError(msg.str());
  }
  const double row_mass = LeadingMass(profile.row, n);
  const double col_mass = LeadingMass(profile.col, n);
  const MassBounds bounds = ApproximateEquilibriumMassBounds(delta);
  if (!bounds.Contains(row_mass, tol.zero) ||
      !bounds.Contains(col_mass, tol.zero)) {
    std::ostringstream msg;
    msg << "leading masses (" << row_mass << ", " << col_mass
        << ") fall outside [" << bounds.lo << ", " << bounds.hi << "]";
    throw CertificateError(msg.str());
  }

  StrategyProfile out{Leading(profile.row, n, row_mass, tol),
                      Leading(profile.col, n, col_mass, tol)};
  const RegretReport source_regrets = ComputeRegrets(source, out, tol);
  return ExtractionResult{std::move(out), row_mass, col_mass,
                          embedded_regrets, source_regrets};
}

BimatrixGame ConcentrationGame(std::size_t n, double delta,
                               const Matrix& row_shift,
                               const Matrix& col_shift,
                               const Tolerances& tol) {
  if (n == 0) throw ShapeError("concentration game needs n >= 1");
  if (!(delta > 0.0 && delta <= kConcentrationDeltaLimit)) {
    std::ostringstream msg;
    msg << "delta must lie in (0, " << kConcentrationDeltaLimit << "]";
    throw ParameterError(msg.str());
  }
  for (const Matrix* m : {&row_shift, &col_shift}) {
    if (m->rows() != n || m->cols() != n)
      throw ShapeError("shift matrices must be n x n");
  }
  for (double v : row_shift.data()) {
    if (v < -delta - tol.zero || v > tol.zero)
      throw ParameterError("row shift entries must lie in [-delta, 0]");
  }
  for (double v : col_shift.data()) {
    if (v < -tol.zero || v > delta + tol.zero)
      throw ParameterError("column shift entries must lie in [0, delta]");
  }

  Matrix r(n + 1, n + 1);
  Matrix c(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r(i, j) = 1.0 + row_shift(i, j);
      c(i, j) = col_shift(i, j);
    }
  }
  FillBorder(r, c, n, delta);
  return BimatrixGame(std::move(r), std::move(c));
}

BimatrixGame ConcentrationGame(std::size_t n, double delta) {
  return ConcentrationGame(n, delta, Matrix(n, n), Matrix(n, n));
}

}  // namespace stablenash
