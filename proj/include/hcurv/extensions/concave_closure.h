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

#ifndef HCURV_EXTENSIONS_CONCAVE_CLOSURE_H_
#define HCURV_EXTENSIONS_CONCAVE_CLOSURE_H_

#include <functional>
#include <span>

#include "hcurv/extensions/fractional_point.h"
#include "hcurv/mconcave/mnat_concave.h"
#include "hcurv/setfn/config.h"

namespace hcurv {

// How far x(E) may drift from k.
inline constexpr double kHullSumTolerance = 1e-7;

struct ClosureResult {
  double value = 0.0;
  ConvexCombination witness;
  int lp_pivots = 0;
};

// max sum_Y lambda_Y h(Y) over convex combinations of size-k sets with
// sum_Y lambda_Y 1_Y = x, solved as an LP over every size-k set. Sets that
// contain a coordinate with x(i) = 0 or miss one with x(i) = 1 are pruned.
// The witness is a basic optimal solution (at most n + 1 sets).
//
// Throws PreconditionError when x(E) != k or x lies outside the hull of
// size-k indicator vectors, and CapExceededError above cap (use
// ClosureSpecialModularIndicator for large modular-plus-indicator h).
ClosureResult ConcaveClosure(const MNatConcaveFn& h, const FractionalPoint& x,
                             int k, int cap = Caps().lp);

// Same LP for an arbitrary set function.
ClosureResult ConcaveClosure(const std::function<double(Subset)>& h,
                             const FractionalPoint& x, int k,
                             int cap = Caps().lp);

// Closed form for h(X) = ell(X) + c0 [X != empty]: ell^T x + c0 when k >= 1,
// and 0 when k = 0.
double ClosureSpecialModularIndicator(std::span<const double> ell, double c0,
                                      const FractionalPoint& x, int k);

}  // namespace hcurv

#endif  // HCURV_EXTENSIONS_CONCAVE_CLOSURE_H_
