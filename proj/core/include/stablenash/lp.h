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

// Small dense linear programs. Every algorithmic module builds its LPs
// through LinearProgram and solves them with SolveLp; nothing else in the
// library knows how the solver works.
//
// The solver is a two-phase tableau simplex with Bland's pivoting rule. It
// is meant for desk-scale problems (up to a few hundred variables).

#ifndef STABLENASH_LP_H_
#define STABLENASH_LP_H_

#include <cstddef>
#include <limits>
#include <vector>

namespace stablenash::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr double kDefaultTolerance = 1e-8;

enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Sense { kMaximize, kMinimize, kFeasibility };

struct Constraint {
  std::vector<double> coeffs;
  Relation relation;
  double rhs;
};

class LinearProgram {
 public:
  // All variables start with bounds [0, +inf) and a zero objective.
  explicit LinearProgram(std::size_t num_vars);

  void SetObjective(std::vector<double> coeffs, Sense sense);
  void AddConstraint(std::vector<double> coeffs, Relation relation,
                     double rhs);
  // Sets a single coefficient on a fresh sparse row; convenience for the
  // common "x_k op rhs" constraint.
  void AddBound(std::size_t var, Relation relation, double rhs);
  // lower may be -inf, upper may be +inf.
  void SetBounds(std::size_t var, double lower, double upper);

  std::size_t num_vars() const { return num_vars_; }
  Sense sense() const { return sense_; }
  const std::vector<double>& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  double lower(std::size_t var) const { return lower_[var]; }
  double upper(std::size_t var) const { return upper_[var]; }

  // Throws ValidationError on length mismatches, non-finite coefficients,
  // or empty bound intervals.
  void Validate() const;

 private:
  std::size_t num_vars_;
  Sense sense_ = Sense::kFeasibility;
  std::vector<double> objective_;
  std::vector<Constraint> constraints_;
  std::vector<double> lower_;
  std::vector<double> upper_;
};

enum class Status { kOptimal, kFeasible, kInfeasible, kUnbounded };

const char* StatusName(Status status);

struct Outcome {
  Status status = Status::kInfeasible;
  // Set when status is kOptimal or kFeasible.
  std::vector<double> solution;
  // Objective at `solution` (0 for feasibility problems).
  double objective_value = 0.0;

  bool has_solution() const {
    return status == Status::kOptimal || status == Status::kFeasible;
  }
};

// Solves `program`. Any returned solution satisfies every constraint and
// bound within `tolerance` (re-checked; a violation throws NumericalError).
Outcome SolveLp(const LinearProgram& program,
                double tolerance = kDefaultTolerance);

// Largest constraint or bound violation of `x`; 0 when x is feasible.
double MaxViolation(const LinearProgram& program, const std::vector<double>& x);

}  // namespace stablenash::lp

#endif  // STABLENASH_LP_H_
