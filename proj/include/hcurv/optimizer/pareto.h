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
// Direction finding for the continuous greedy step: pick v in
// P_k = {v in [0,1]^n : v(E) = k} with large grad^T v and large closure
// value. The upper-right boundary of {(h(Y), grad(Y)) : |Y| = k} (convex
// hull) is traced by weighted greedy calls, since a * grad(Y) + b * h(Y) with
// a, b >= 0 is M-natural concave and greedy maximizes it exactly.
//

#ifndef HCURV_OPTIMIZER_PARETO_H_
#define HCURV_OPTIMIZER_PARETO_H_

#include <optional>
#include <span>
#include <vector>

#include "hcurv/extensions/fractional_point.h"
#include "hcurv/mconcave/mnat_concave.h"
#include "hcurv/setfn/subset.h"

namespace hcurv {

struct FrontierPoint {
  Subset set;
  double lin = 0.0;  // grad(Y)
  double clo = 0.0;  // h(Y)
};

// Vertices of the upper-right hull, clo strictly increasing and lin strictly
// decreasing.
std::vector<FrontierPoint> ParetoFrontier(std::span<const double> grad,
                                          const MNatConcaveFn& h, int k);

struct DirectionResult {
  FractionalPoint v;
  ConvexCombination witness;
  double lin = 0.0;  // grad^T v
  double clo = 0.0;  // sum_t lambda_t h(Y_t)
};

// The frontier point with the largest lin among those with clo >= beta
// (a single vertex or a mix of two adjacent ones). Returns nullopt when no
// point reaches clo >= beta - tol or that point has lin < alpha - tol.
// Pass alpha = -infinity to only constrain clo.
std::optional<DirectionResult> ParetoDirection(std::span<const double> grad,
                                               const MNatConcaveFn& h, int k,
                                               double alpha, double beta,
                                               double tol = 1e-9);

}  // namespace hcurv

#endif  // HCURV_OPTIMIZER_PARETO_H_
