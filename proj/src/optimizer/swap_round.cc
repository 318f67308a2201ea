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

#include "hcurv/optimizer/swap_round.h"

#include <string>

#include "hcurv/mconcave/exchange.h"
#include "hcurv/setfn/errors.h"

namespace hcurv {

Subset SwapRound(const MNatConcaveFn& h, const ConvexCombination& comb,
                 Rng& rng) {
  const ConvexCombination norm = comb.Normalized();
  if (norm.terms.empty()) throw PreconditionError("SwapRound: empty combination");
  for (const auto& term : norm.terms) {
    if (term.set.Size() != norm.cardinality) {
      throw PreconditionError("SwapRound: set " + ToString(term.set) +
                              " has the wrong cardinality");
    }
    if (!(term.weight > 0.0)) {
      throw PreconditionError("SwapRound: weights must be positive");
    }
  }
  Subset xa = norm.terms[0].set;
  double la = norm.terms[0].weight;
  for (size_t b = 1; b < norm.terms.size(); ++b) {
    Subset xb = norm.terms[b].set;
    const double lb = norm.terms[b].weight;
    while (xa != xb) {
      const int i = (xa - xb).Lowest();
      const int j = ExchangePartner(h, xa, xb, i);
      if (rng.Uniform() < lb / (la + lb)) {
        xa = xa.Without(i).With(j);
      } else {
        xb = xb.With(i).Without(j);
      }
    }
    la += lb;
  }
  return xa;
}

Subset SwapRound(const MNatConcaveFn& h, const ConvexCombination& comb,
                 uint64_t seed) {
  Rng rng(seed);
  return SwapRound(h, comb, rng);
}

}  // namespace hcurv
