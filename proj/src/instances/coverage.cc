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

#include "hcurv/instances/coverage.h"

#include <string>
#include <utility>

#include "hcurv/setfn/errors.h"

namespace hcurv {

void ValidateCoverage(const CoverageInstance& inst) {
  GroundSet ground(inst.n);
  for (size_t v = 0; v < inst.gamma.size(); ++v) {
    const Subset s = inst.gamma[v];
    if (s.Size() == 0) {
      throw PreconditionError("coverage: item " + std::to_string(v) +
                              " has no neighbors");
    }
    if (!ground.Contains(s)) {
      throw PreconditionError("coverage: item " + std::to_string(v) +
                              " has a neighbor outside the ground set");
    }
  }
}

SetFunctionOracle CoverageFunction(const CoverageInstance& inst) {
  ValidateCoverage(inst);
  return SetFunctionOracle(
      inst.n,
      [gamma = inst.gamma](Subset x) {
        int covered = 0;
        for (const Subset s : gamma) covered += (s & x).Size() > 0 ? 1 : 0;
        return static_cast<double>(covered);
      },
      "coverage");
}

HessianBounds CoveragePairCounts(const CoverageInstance& inst) {
  ValidateCoverage(inst);
  SymmetricMatrix h(inst.n);
  for (const Subset s : inst.gamma) {
    if (s.Size() != 2) continue;
    const std::vector<int> pair = s.Elements();
    h.Set(pair[0], pair[1], h(pair[0], pair[1]) - 1.0);
  }
  return {std::move(h), HessianBounds::Source::kCoverageClosedForm};
}

Decomposition CoverageDecomposition(const CoverageInstance& inst, int cap) {
  return BuildQuadraticDecomposition(CoverageFunction(inst),
                                     CoveragePairCounts(inst), cap);
}

}  // namespace hcurv
