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

#include "hcurv/mconcave/greedy.h"

#include <limits>
#include <string>
#include <vector>

#include "hcurv/setfn/errors.h"

namespace hcurv {

SubsetValue GreedyMaximize(int n, int k,
                           const std::function<double(Subset)>& objective) {
  GroundSet ground(n);
  if (k < 0 || k > n) {
    throw PreconditionError("greedy: cardinality " + std::to_string(k) +
                            " outside [0, " + std::to_string(n) + "]");
  }
  Subset current;
  double value = objective(current);
  for (int step = 0; step < k; ++step) {
    int best = -1;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int e = 0; e < n; ++e) {
      if (current.Contains(e)) continue;
      const double candidate = objective(current.With(e));
      if (best < 0 || candidate > best_value + kGreedyTieTolerance) {
        best = e;
        best_value = candidate;
      }
    }
    current = current.With(best);
    value = best_value;
  }
  return {current, value};
}

SubsetValue GreedyMaxCard(const MNatConcaveFn& h, std::span<const double> w,
                          int k) {
  if (static_cast<int>(w.size()) != h.n()) {
    throw PreconditionError("GreedyMaxCard: weight vector size mismatch");
  }
  return GreedyMaximize(h.n(), k, [&](Subset y) {
    double total = h.Value(y);
    y.ForEach([&](int i) { total += w[i]; });
    return total;
  });
}

SubsetValue GreedyMaxCard(const MNatConcaveFn& h, int k) {
  const std::vector<double> zero(h.n(), 0.0);
  return GreedyMaxCard(h, zero, k);
}

}  // namespace hcurv
