// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hcurv/extensions/linear_program.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "hcurv/setfn/errors.h"

namespace hcurv {
namespace {

class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * (cols + 1)) {}

  double& at(int r, int c) { return data_[Index(r, c)]; }
  double at(int r, int c) const { return data_[Index(r, c)]; }
  double& rhs(int r) { return at(r, cols_); }
  double rhs(int r) const { return at(r, cols_); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void Pivot(int pr, int pc) {
    const double inv = 1.0 / at(pr, pc);
    for (int c = 0; c <= cols_; ++c) at(pr, c) *= inv;
    at(pr, pc) = 1.0;
    for (int r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      const double factor = at(r, pc);
      if (factor == 0.0) continue;
      for (int c = 0; c <= cols_; ++c) at(r, c) -= factor * at(pr, c);
      at(r, pc) = 0.0;
    }
  }

  void RemoveRow(int r) {
    const size_t width = static_cast<size_t>(cols_) + 1;
    data_.erase(data_.begin() + static_cast<std::ptrdiff_t>(r * width),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * width));
    --rows_;
  }

 private:
  size_t Index(int r, int c) const {
    return static_cast<size_t>(r) * (cols_ + 1) + c;
  }

  int rows_;
  int cols_;
  std::vector<double> data_;
};

enum class Outcome { kOptimal, kUnbounded };

// Maximizes cost^T x over the current tableau with Bland's rule. Columns with
// allowed[c] == false never enter.
Outcome RunSimplex(Tableau& t, std::vector<int>& basis,
                   const std::vector<double>& cost,
                   const std::vector<bool>& allowed, double eps, int& pivots) {
  const int cols = t.cols();
  std::vector<double> reduced(cols);
  while (true) {
    for (int c = 0; c < cols; ++c) reduced[c] = cost[c];
    for (int r = 0; r < t.rows(); ++r) {
      const double cb = cost[basis[r]];
      if (cb == 0.0) continue;
      for (int c = 0; c < cols; ++c) reduced[c] -= cb * t.at(r, c);
    }
    int entering = -1;
    for (int c = 0; c < cols; ++c) {
      if (allowed[c] && reduced[c] > eps) {
        entering = c;
        break;
      }
    }
    if (entering < 0) return Outcome::kOptimal;

    int leaving = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, entering);
      if (a <= eps) continue;
      const double ratio = t.rhs(r) / a;
      if (leaving < 0 || ratio < best_ratio - eps) {
        leaving = r;
        best_ratio = ratio;
      } else if (ratio <= best_ratio + eps && basis[r] < basis[leaving]) {
        leaving = r;
        best_ratio = std::min(best_ratio, ratio);
      }
    }
    if (leaving < 0) return Outcome::kUnbounded;
    t.Pivot(leaving, entering);
    basis[leaving] = entering;
    ++pivots;
  }
}

}  // namespace

void LinearProgram::AddRow(std::vector<double> coeffs, ConstraintSense sense,
                           double rhs) {
  rows.push_back({std::move(coeffs), sense, rhs});
}

std::string_view LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "";
}

LpSolution SolveLinearProgram(const LinearProgram& lp, double eps) {
  const int n = lp.num_vars;
  if (n < 1 || static_cast<int>(lp.objective.size()) != n) {
    throw PreconditionError("LP: objective length must equal num_vars >= 1");
  }
  for (double c : lp.objective) {
    if (!std::isfinite(c)) throw PreconditionError("LP: non-finite objective");
  }
  const int m = static_cast<int>(lp.rows.size());

  // Column layout: original variables, one slack/surplus per inequality,
  // one artificial per >= or = row (after making every rhs nonnegative).
  std::vector<ConstraintSense> sense(m);
  std::vector<double> sign(m, 1.0);
  int slack_count = 0;
  int artificial_count = 0;
  for (int r = 0; r < m; ++r) {
    const auto& row = lp.rows[r];
    if (static_cast<int>(row.coeffs.size()) != n || !std::isfinite(row.rhs)) {
      throw PreconditionError("LP: row " + std::to_string(r) +
                              " has the wrong length or a non-finite rhs");
    }
    sense[r] = row.sense;
    if (row.rhs < 0.0) {
      sign[r] = -1.0;
      if (sense[r] == ConstraintSense::kLessEqual) {
        sense[r] = ConstraintSense::kGreaterEqual;
      } else if (sense[r] == ConstraintSense::kGreaterEqual) {
        sense[r] = ConstraintSense::kLessEqual;
      }
    }
    if (sense[r] != ConstraintSense::kEqual) ++slack_count;
    if (sense[r] != ConstraintSense::kLessEqual) ++artificial_count;
  }
  const int first_slack = n;
  const int first_artificial = n + slack_count;
  const int cols = first_artificial + artificial_count;

  Tableau t(m, cols);
  std::vector<int> basis(m);
  int next_slack = first_slack;
  int next_artificial = first_artificial;
  for (int r = 0; r < m; ++r) {
    const auto& row = lp.rows[r];
    for (int c = 0; c < n; ++c) {
      if (!std::isfinite(row.coeffs[c])) {
        throw PreconditionError("LP: non-finite coefficient");
      }
      t.at(r, c) = sign[r] * row.coeffs[c];
    }
    t.rhs(r) = sign[r] * row.rhs;
    switch (sense[r]) {
      case ConstraintSense::kLessEqual:
        t.at(r, next_slack) = 1.0;
        basis[r] = next_slack++;
        break;
      case ConstraintSense::kGreaterEqual:
        t.at(r, next_slack++) = -1.0;
        t.at(r, next_artificial) = 1.0;
        basis[r] = next_artificial++;
        break;
      case ConstraintSense::kEqual:
        t.at(r, next_artificial) = 1.0;
        basis[r] = next_artificial++;
        break;
    }
  }

  LpSolution solution;
  std::vector<bool> allowed(cols, true);

  if (artificial_count > 0) {
    std::vector<double> phase1(cols, 0.0);
    for (int c = first_artificial; c < cols; ++c) phase1[c] = -1.0;
    RunSimplex(t, basis, phase1, allowed, eps, solution.pivots);
    double infeasibility = 0.0;
    double scale = 1.0;
    for (int r = 0; r < t.rows(); ++r) {
      if (basis[r] >= first_artificial) infeasibility += t.rhs(r);
    }
    for (const auto& row : lp.rows) scale = std::max(scale, std::abs(row.rhs));
    if (infeasibility > 1e-9 * scale) {
      solution.status = LpStatus::kInfeasible;
      return solution;
    }
    // Drive artificial variables out of the basis; rows where that is
    // impossible are redundant.
    for (int r = t.rows() - 1; r >= 0; --r) {
      if (basis[r] < first_artificial) continue;
      int pivot_col = -1;
      for (int c = 0; c < first_artificial; ++c) {
        if (std::abs(t.at(r, c)) > 1e-9) {
          pivot_col = c;
          break;
        }
      }
      if (pivot_col >= 0) {
        t.Pivot(r, pivot_col);
        basis[r] = pivot_col;
        ++solution.pivots;
      } else {
        t.RemoveRow(r);
        basis.erase(basis.begin() + r);
      }
    }
    for (int c = first_artificial; c < cols; ++c) allowed[c] = false;
  }

  std::vector<double> cost(cols, 0.0);
  for (int c = 0; c < n; ++c) cost[c] = lp.objective[c];
  if (RunSimplex(t, basis, cost, allowed, eps, solution.pivots) ==
      Outcome::kUnbounded) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  solution.status = LpStatus::kOptimal;
  solution.x.assign(n, 0.0);
  for (int r = 0; r < t.rows(); ++r) {
    if (basis[r] < n) solution.x[basis[r]] = std::max(0.0, t.rhs(r));
  }
  for (int c = 0; c < n; ++c) {
    solution.objective += lp.objective[c] * solution.x[c];
  }
  return solution;
}

}  // namespace hcurv
