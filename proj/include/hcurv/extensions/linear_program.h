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

//
// A small dense two-phase simplex solver with Bland's rule. Meant for the
// desk-scale LPs in this library (a few dozen rows, up to ~10^4 columns).
//

#ifndef HCURV_EXTENSIONS_LINEAR_PROGRAM_H_
#define HCURV_EXTENSIONS_LINEAR_PROGRAM_H_

#include <string_view>
#include <vector>

namespace hcurv {

enum class ConstraintSense { kLessEqual, kEqual, kGreaterEqual };

// maximize objective^T x  subject to  rows, x >= 0.
struct LinearProgram {
  struct Row {
    std::vector<double> coeffs;
    ConstraintSense sense = ConstraintSense::kEqual;
    double rhs = 0.0;
  };

  int num_vars = 0;
  std::vector<double> objective;
  std::vector<Row> rows;

  void AddRow(std::vector<double> coeffs, ConstraintSense sense, double rhs);
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string_view LpStatusName(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
  int pivots = 0;
};

// Throws PreconditionError on malformed input (row length mismatch,
// non-finite data). The returned x is a basic solution, so it has at most
// (number of independent rows) nonzero entries.
LpSolution SolveLinearProgram(const LinearProgram& lp, double eps = 1e-10);

}  // namespace hcurv

#endif  // HCURV_EXTENSIONS_LINEAR_PROGRAM_H_
