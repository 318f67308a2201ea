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

#ifndef HCURV_OPTIMIZER_LAZY_GREEDY_H_
#define HCURV_OPTIMIZER_LAZY_GREEDY_H_

#include "hcurv/setfn/brute_force.h"
#include "hcurv/setfn/set_function.h"

namespace hcurv {

// Plain greedy for |X| <= k: adds the element with the best f(X + e),
// scanning e ascending and switching only on improvements above
// kGreedyTieTolerance.
SubsetValue NaiveGreedy(const SetFunctionOracle& f, int k);

// Accelerated greedy with stale marginal bounds in a priority queue. When
// the leading fresh gain is not ahead of every other bound by more than
// the tie tolerance, the round falls back to a full scan, so the output
// is identical to NaiveGreedy for submodular f.
SubsetValue LazyGreedy(const SetFunctionOracle& f, int k);

}  // namespace hcurv

#endif  // HCURV_OPTIMIZER_LAZY_GREEDY_H_
