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

#include "stablenash/lp.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "stablenash/errors.h"

namespace stablenash::lp {

LinearProgram::LinearProgram(std::size_t num_vars)
    : num_vars_(num_vars),
      objective_(num_vars, 0.0),
      lower_(num_vars, 0.0),
      upper_(num_vars, kInfinity) {}

void LinearProgram::SetObjective(std::vector<double> coeffs, Sense sense) {
  if (coeffs.size() != num_vars_) {
    throw ValidationError("objective has " + std::to_string(coeffs.size()) +
                          " coefficients for " + std::to_string(num_vars_) +
                          " variables");
  }
  objective_ = std::move(coeffs);
  sense_ = sense;
}

void LinearProgram::AddConstraint(std::vector<double> coeffs,
                                  Relation relation, double rhs) {
  if (coeffs.size() != num_vars_) {
    throw ValidationError("constraint has " + std::to_string(coeffs.size()) +
                          " coefficients for " + std::to_string(num_vars_) +
                          " variables");
  }
  constraints_.push_back({std::move(coeffs), relation, rhs});
}

void LinearProgram::AddBound(std::size_t var, Relation relation, double rhs) {
  if (var >= num_vars_) throw ValidationError("variable index out of range");
  std::vector<double> coeffs(num_vars_, 0.0);
  coeffs[var] = 1.0;
  AddConstraint(std::move(coeffs), relation, rhs);
}

void LinearProgram::SetBounds(std::size_t var, double lower, double upper) {
  if (var >= num_vars_) throw ValidationError("variable index out of range");
  lower_[var] = lower;
  upper_[var] = upper;
}

void LinearProgram::Validate() const {
  auto finite = [](double x) { return std::isfinite(x); };
  if (!std::ranges::all_of(objective_, finite)) {
    throw ValidationError("non-finite objective coefficient");
  }
  for (const Constraint& c : constraints_) {
    if (c.coeffs.size() != num_vars_) {
      throw ValidationError("constraint length mismatch");
    }
    if (!std::ranges::all_of(c.coeffs, finite) || !std::isfinite(c.rhs)) {
      throw ValidationError("non-finite constraint data");
    }
  }
  for (std::size_t k = 0; k < num_vars_; ++k) {
    if (std::isnan(lower_[k]) || std::isnan(upper_[k]) ||
        lower_[k] == kInfinity || upper_[k] == -kInfinity ||
        lower_[k] > upper_[k]) {
      throw ValidationError("invalid bounds on variable " +
                            std::to_string(k));
    }
  }
}

const char* StatusName(Status status) {
  switch (status) {
    case Status::kOptimal:
      return "optimal";
    case Status::kFeasible:
      return "feasible";
    case Status::kInfeasible:
      return "infeasible";
    case Status::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

double MaxViolation(const LinearProgram& program,
                    const std::vector<double>& x) {
  double worst = 0.0;
  for (std::size_t k = 0; k < program.num_vars(); ++k) {
    worst = std::max(worst, program.lower(k) - x[k]);
    worst = std::max(worst, x[k] - program.upper(k));
  }
  for (const Constraint& c : program.constraints()) {
    double lhs = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) lhs += c.coeffs[k] * x[k];
    switch (c.relation) {
      case Relation::kLessEqual:
        worst = std::max(worst, lhs - c.rhs);
        break;
      case Relation::kGreaterEqual:
        worst = std::max(worst, c.rhs - lhs);
        break;
      case Relation::kEqual:
        worst = std::max(worst, std::abs(lhs - c.rhs));
        break;
    }
  }
  return worst;
}

namespace {

// Dense tableau for: maximize c^T y  s.t.  A y <= b, y >= 0.
//
// Layout follows the classic single-artificial formulation: column n holds
// the artificial variable used by phase one, column n+1 the right-hand side;
// row m is the phase-two objective and row m+1 the phase-one objective.
// Variable labels: 0..n-1 structural, n..n+m-1 slacks, -1 the artificial.
class Tableau {
 public:
  Tableau(const std::vector<std::vector<double>>& a,
          const std::vector<double>& b, const std::vector<double>& c,
          double eps)
      : m_(b.size()),
        n_(c.size()),
        eps_(eps),
        basis_(m_),
        nonbasis_(n_ + 1),
        d_(m_ + 2, std::vector<double>(n_ + 2, 0.0)) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) d_[i][j] = a[i][j];
      basis_[i] = static_cast<long>(n_ + i);
      d_[i][n_] = -1.0;
      d_[i][n_ + 1] = b[i];
    }
    for (std::size_t j = 0; j < n_; ++j) {
      nonbasis_[j] = static_cast<long>(j);
      d_[m_][j] = -c[j];
    }
    nonbasis_[n_] = -1;
    d_[m_ + 1][n_] = 1.0;
  }

  // Returns the status and fills y.
  Status Solve(std::vector<double>& y, double& value) {
    if (m_ > 0) {
      std::size_t r = 0;
      for (std::size_t i = 1; i < m_; ++i)
        if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
      if (d_[r][n_ + 1] < -eps_) {
        Pivot(r, n_);
        if (!Run(2) || d_[m_ + 1][n_ + 1] < -eps_) return Status::kInfeasible;
        // Drive the artificial out of the basis if it is still there.
        for (std::size_t i = 0; i < m_; ++i) {
          if (basis_[i] != -1) continue;
          std::size_t s = 0;
          for (std::size_t j = 1; j <= n_; ++j) {
            if (std::make_pair(d_[i][j], nonbasis_[j]) <
                std::make_pair(d_[i][s], nonbasis_[s]))
              s = j;
          }
          Pivot(i, s);
        }
      }
    }
    const bool bounded = Run(1);
    y.assign(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= 0 && static_cast<std::size_t>(basis_[i]) < n_) {
        y[static_cast<std::size_t>(basis_[i])] = d_[i][n_ + 1];
      }
    }
    value = d_[m_][n_ + 1];
    return bounded ? Status::kOptimal : Status::kUnbounded;
  }

 private:
  void Pivot(std::size_t r, std::size_t s) {
    const double inv = 1.0 / d_[r][s];
    for (std::size_t i = 0; i < m_ + 2; ++i) {
      if (i == r || std::abs(d_[i][s]) <= eps_) continue;
      const double factor = d_[i][s] * inv;
      for (std::size_t j = 0; j < n_ + 2; ++j) d_[i][j] -= d_[r][j] * factor;
      d_[i][s] = d_[r][s] * factor;
    }
    for (std::size_t j = 0; j < n_ + 2; ++j)
      if (j != s) d_[r][j] *= inv;
    for (std::size_t i = 0; i < m_ + 2; ++i)
      if (i != r) d_[i][s] *= -inv;
    d_[r][s] = inv;
    std::swap(basis_[r], nonbasis_[s]);
  }

  // Bland's rule: the entering variable is the lowest label with a negative
  // reduced cost; ratio-test ties go to the lowest basic label.
  bool Run(int phase) {
    const std::size_t obj = m_ + static_cast<std::size_t>(phase) - 1;
    for (;;) {
      long entering_label = 0;
      std::size_t s = n_ + 1;
      for (std::size_t j = 0; j <= n_; ++j) {
        if (nonbasis_[j] == -phase) continue;
        if (d_[obj][j] < -eps_ && (s == n_ + 1 || nonbasis_[j] < entering_label)) {
          s = j;
          entering_label = nonbasis_[j];
        }
      }
      if (s == n_ + 1) return true;
      std::size_t r = m_;
      for (std::size_t i = 0; i < m_; ++i) {
        if (d_[i][s] <= eps_) continue;
        if (r == m_) {
          r = i;
          continue;
        }
        const double lhs = d_[i][n_ + 1] / d_[i][s];
        const double rhs = d_[r][n_ + 1] / d_[r][s];
        if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[r])) r = i;
      }
      if (r == m_) return false;
      Pivot(r, s);
    }
  }

  std::size_t m_;
  std::size_t n_;
  double eps_;
  std::vector<long> basis_;
  std::vector<long> nonbasis_;
  std::vector<std::vector<double>> d_;
};

// How an original variable is expressed through non-negative tableau
// variables: x = offset + sign * y[col] (- y[col2] for free variables).
struct VarMap {
  double offset = 0.0;
  double sign = 1.0;
  std::size_t col = 0;
  bool split = false;
  std::size_t col2 = 0;
};

}  // namespace

Outcome SolveLp(const LinearProgram& program, double tolerance) {
  program.Validate();
  const std::size_t n = program.num_vars();

  std::vector<VarMap> maps(n);
  std::size_t cols = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double lo = program.lower(k);
    const double hi = program.upper(k);
    VarMap& vm = maps[k];
    vm.col = cols++;
    if (std::isfinite(lo)) {
      vm.offset = lo;
    } else if (std::isfinite(hi)) {
      vm.offset = hi;
      vm.sign = -1.0;
    } else {
      vm.split = true;
      vm.col2 = cols++;
    }
  }

  std::vector<std::vector<double>> a;
  std::vector<double> b;
  auto add_row = [&](const std::vector<double>& coeffs, double rhs,
                     double scale) {
    std::vector<double> row(cols, 0.0);
    double shifted = rhs;
    for (std::size_t k = 0; k < n; ++k) {
      const double ck = coeffs[k];
      if (ck == 0.0) continue;
      shifted -= ck * maps[k].offset;
      row[maps[k].col] += scale * ck * maps[k].sign;
      if (maps[k].split) row[maps[k].col2] -= scale * ck;
    }
    a.push_back(std::move(row));
    b.push_back(scale * shifted);
  };

  for (const Constraint& c : program.constraints()) {
    switch (c.relation) {
      case Relation::kLessEqual:
        add_row(c.coeffs, c.rhs, 1.0);
        break;
      case Relation::kGreaterEqual:
        add_row(c.coeffs, c.rhs, -1.0);
        break;
      case Relation::kEqual:
        add_row(c.coeffs, c.rhs, 1.0);
        add_row(c.coeffs, c.rhs, -1.0);
        break;
    }
  }
  // Upper bounds that were not absorbed by the variable substitution.
  for (std::size_t k = 0; k < n; ++k) {
    const double lo = program.lower(k);
    const double hi = program.upper(k);
    if (std::isfinite(lo) && std::isfinite(hi)) {
      std::vector<double> unit(n, 0.0);
      unit[k] = 1.0;
      add_row(unit, hi, 1.0);
    }
  }

  const double direction =
      program.sense() == Sense::kMinimize ? -1.0 : 1.0;
  std::vector<double> c(cols, 0.0);
  if (program.sense() != Sense::kFeasibility) {
    for (std::size_t k = 0; k < n; ++k) {
      const double ck = direction * program.objective()[k];
      c[maps[k].col] += ck * maps[k].sign;
      if (maps[k].split) c[maps[k].col2] -= ck;
    }
  }

  Tableau tableau(a, b, c, tolerance);
  std::vector<double> y;
  double value = 0.0;
  const Status status = tableau.Solve(y, value);

  Outcome out;
  out.status = status;
  if (status == Status::kInfeasible || status == Status::kUnbounded) {
    return out;
  }
  out.solution.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const VarMap& vm = maps[k];
    double x = vm.offset + vm.sign * y[vm.col];
    if (vm.split) x -= y[vm.col2];
    // Snap roundoff back inside the box.
    x = std::clamp(x, program.lower(k), program.upper(k));
    out.solution[k] = x;
  }
  double objective = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    objective += program.objective()[k] * out.solution[k];
  out.objective_value =
      program.sense() == Sense::kFeasibility ? 0.0 : objective;
  if (program.sense() == Sense::kFeasibility) out.status = Status::kFeasible;

  const double violation = MaxViolation(program, out.solution);
  if (violation > tolerance) {
    throw NumericalError("simplex solution violates constraints by " +
                         std::to_string(violation));
  }
  return out;
}

}  // namespace stablenash::lp
