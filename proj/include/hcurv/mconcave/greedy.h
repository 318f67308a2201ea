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

#ifndef HCURV_MCONCAVE_GREEDY_H_
#define HCURV_MCONCAVE_GREEDY_H_

#include <functional>
#include <span>

#include "hcurv/mconcave/mnat_concave.h"
#include "hcurv/setfn/brute_force.h"

namespace hcurv {

// Gains closer than this are ties, won by the smaller index.
inline constexpr double kGreedyTieTolerance = 1e-12;

// k augmentations, each adding the element with the largest
// objective(Y + e) - objective(Y).
SubsetValue GreedyMaximize(int n, int k,
                           const std::function<double(Subset)>& objective);

// Maximizes w(Y) + h(Y) over |Y| = k. Exact: a modular function plus an
// M-natural concave function is M-natural concave, and greedy augmentation
// maximizes those at every cardinality. Throws PreconditionError if k > n.
SubsetValue GreedyMaxCard(const MNatConcaveFn& h, std::span<const double> w,
                          int k);

// Same with w = 0.
SubsetValue GreedyMaxCard(const MNatConcaveFn& h, int k);

}  // namespace hcurv

#endif  // HCURV_MCONCAVE_GREEDY_H_
