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

#include "hcurv/optimizer/lazy_greedy.h"

#include <limits>
#include <queue>
#include <string>
#include <tuple>
#include <vector>

#include "hcurv/mconcave/greedy.h"
#include "hcurv/setfn/errors.h"

namespace hcurv {
namespace {

void CheckCardinality(int n, int k) {
  if (k < 0 || k > n) {
    throw PreconditionError("greedy: cardinality " + std::to_string(k) +
                            " outside [0, " + std::to_string(n) + "]");
  }
}

}  // namespace

SubsetValue NaiveGreedy(const SetFunctionOracle& f, int k) {
  CheckCardinality(f.n(), k);
  return GreedyMaximize(f.n(), k, [&](Subset x) { return f.Value(x); });
}

SubsetValue LazyGreedy(const SetFunctionOracle& f, int k) {
  const int n = f.n();
  CheckCardinality(n, k);
  Subset current;
  double value = f.Value(current);

  // (bound, -element, round evaluated); largest bound first, then smallest
  // element.
  using Entry = std::tuple<double, int, int>;
  std::priority_queue<Entry> heap;
  std::vector<double> fresh_value(n, 0.0);
  for (int e = 0; e < n; ++e) {
    fresh_value[e] = f.Value(current.With(e));
    heap.emplace(fresh_value[e] - value, -e, 0);
  }

  for (int round = 0; round < k; ++round) {
    int chosen = -1;
    double chosen_value = 0.0;
    while (chosen < 0) {
      const auto [bound, neg_e, seen] = heap.top();
      const int e = -neg_e;
      heap.pop();
      if (seen != round) {
        fresh_value[e] = f.Value(current.With(e));
        heap.emplace(fresh_value[e] - value, -e, round);
        continue;
      }
      const bool clear_lead =
          heap.empty() ||
          std::get<0>(heap.top()) < bound - kGreedyTieTolerance;
      if (clear_lead) {
        chosen = e;
        chosen_value = fresh_value[e];
        break;
      }
      // Possible tie: rescan everything the same way NaiveGreedy does.
      heap.emplace(bound, neg_e, seen);
      std::vector<Entry> rest;
      while (!heap.empty()) {
        rest.push_back(heap.top());
        heap.pop();
      }
      std::vector<bool> remaining(n, false);
      std::vector<int> round_seen(n, -1);
      for (const auto& [b, ne, s] : rest) {
        remaining[-ne] = true;
        round_seen[-ne] = s;
      }
      double best_value = -std::numeric_limits<double>::infinity();
      for (int c = 0; c < n; ++c) {
        if (!remaining[c]) continue;
        if (round_seen[c] != round) {
          fresh_value[c] = f.Value(current.With(c));
          round_seen[c] = round;
        }
        if (chosen < 0 || fresh_value[c] > best_value + kGreedyTieTolerance) {
          chosen = c;
          best_value = fresh_value[c];
        }
      }
      chosen_value = best_value;
      for (int c = 0; c < n; ++c) {
        if (remaining[c] && c != chosen) {
          heap.emplace(fresh_value[c] - value, -c, round);
        }
      }
    }
    current = current.With(chosen);
    value = chosen_value;
  }
  return {current, value};
}

}  // namespace hcurv
