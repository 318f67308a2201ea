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

#include "hcurv/extensions/concave_closure.h"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "hcurv/extensions/linear_program.h"
#include "hcurv/setfn/errors.h"

namespace hcurv {
namespace {

constexpr double kWitnessDropTolerance = 1e-12;

void CheckHullSum(const FractionalPoint& x, int k) {
  if (k < 0 || k > x.n()) {
    throw PreconditionError("concave closure: cardinality " +
                            std::to_string(k) + " outside [0, n]");
  }
  if (std::abs(x.Sum() - k) > kHullSumTolerance) {
    std::ostringstream msg;
    msg << "concave closure: x(E) = " << x.Sum() << " differs from k = " << k;
    throw PreconditionError(msg.str());
  }
}

}  // namespace

ClosureResult ConcaveClosure(const std::function<double(Subset)>& h,
                             const FractionalPoint& x, int k, int cap) {
  const int n = x.n();
  if (n > cap) {
    throw CapExceededError(
        "ConcaveClosure: LP path is capped; use "
        "ClosureSpecialModularIndicator for modular-plus-indicator functions",
        n, cap);
  }
  CheckHullSum(x, k);

  const Subset ones = x.Ones();
  const Subset zeros = x.Zeros();
  const Subset free = Subset::Full(n) - ones - zeros;
  const int need = k - ones.Size();
  if (need < 0 || need > free.Size()) {
    throw PreconditionError(
        "concave closure: x lies outside the hull of size-k sets");
  }

  ClosureResult result;
  if (free.Empty()) {
    result.witness = ConvexCombination::Single(ones);
    result.value = h(ones);
    return result;
  }

  const std::vector<int> free_elements = free.Elements();
  std::vector<Subset> candidates;
  for (Subset local : SubsetsOfSize(free.Size(), need)) {
    Subset y = ones;
    local.ForEach([&](int t) { y = y.With(free_elements[t]); });
    candidates.push_back(y);
  }

  LinearProgram lp;
  lp.num_vars = static_cast<int>(candidates.size());
  lp.objective.reserve(candidates.size());
  for (Subset y : candidates) lp.objective.push_back(h(y));
  for (int i : free_elements) {
    std::vector<double> row(candidates.size());
    for (size_t c = 0; c < candidates.size(); ++c) {
      row[c] = candidates[c].Contains(i) ? 1.0 : 0.0;
    }
    lp.AddRow(std::move(row), ConstraintSense::kEqual, x[i]);
  }
  lp.AddRow(std::vector<double>(candidates.size(), 1.0),
            ConstraintSense::kEqual, 1.0);

  const LpSolution solution = SolveLinearProgram(lp);
  result.lp_pivots = solution.pivots;
  if (solution.status != LpStatus::kOptimal) {
    throw PreconditionError(
        "concave closure: x lies outside the hull of size-k sets");
  }
  result.witness.cardinality = k;
  for (size_t c = 0; c < candidates.size(); ++c) {
    if (solution.x[c] > kWitnessDropTolerance) {
      result.witness.terms.push_back({solution.x[c], candidates[c]});
    }
  }
  result.value = result.witness.Evaluate(h);
  return result;
}

ClosureResult ConcaveClosure(const MNatConcaveFn& h, const FractionalPoint& x,
                             int k, int cap) {
  if (h.n() != x.n()) {
    throw PreconditionError("concave closure: point and function sizes differ");
  }
  return ConcaveClosure([&h](Subset y) { return h.Value(y); }, x, k, cap);
}

double ClosureSpecialModularIndicator(std::span<const double> ell, double c0,
                                      const FractionalPoint& x, int k) {
  if (static_cast<int>(ell.size()) != x.n()) {
    throw PreconditionError("closure: ell and x sizes differ");
  }
  CheckHullSum(x, k);
  if (k == 0) return 0.0;
  double total = c0;
  for (int i = 0; i < x.n(); ++i) total += ell[i] * x[i];
  return total;
}

}  // namespace hcurv
