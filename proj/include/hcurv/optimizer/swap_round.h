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

#ifndef HCURV_OPTIMIZER_SWAP_ROUND_H_
#define HCURV_OPTIMIZER_SWAP_ROUND_H_

#include <cstdint>

#include "hcurv/extensions/fractional_point.h"
#include "hcurv/mconcave/mnat_concave.h"
#include "hcurv/setfn/random.h"
#include "hcurv/setfn/subset.h"

namespace hcurv {

// Randomized swap rounding of a convex combination of size-k sets to one
// size-k set. Support sets are taken in LexLess order and merged front to
// back: the running set X_a (weight lambda_a) is moved towards the next set
// X_b one exchange at a time. Each exchange takes the smallest i in
// X_a - X_b and its partner j = ExchangePartner(h, X_a, X_b, i); with
// probability lambda_b / (lambda_a + lambda_b) X_a becomes X_a - i + j,
// otherwise X_b becomes X_b + i - j. Once equal the two are merged.
Subset SwapRound(const MNatConcaveFn& h, const ConvexCombination& comb,
                 Rng& rng);
Subset SwapRound(const MNatConcaveFn& h, const ConvexCombination& comb,
                 uint64_t seed);

}  // namespace hcurv

#endif  // HCURV_OPTIMIZER_SWAP_ROUND_H_
