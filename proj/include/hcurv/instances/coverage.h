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

#ifndef HCURV_INSTANCES_COVERAGE_H_
#define HCURV_INSTANCES_COVERAGE_H_

#include <vector>

#include "hcurv/decompose/decomposition.h"
#include "hcurv/decompose/hessian.h"
#include "hcurv/setfn/config.h"
#include "hcurv/setfn/set_function.h"
#include "hcurv/setfn/subset.h"

namespace hcurv {

// Bipartite graph between items V and elements E = {0..n-1}; gamma[v] is
// the neighborhood of item v.
struct CoverageInstance {
  int n = 0;
  std::vector<Subset> gamma;
};

// Throws PreconditionError for empty or out-of-range neighborhoods.
void ValidateCoverage(const CoverageInstance& inst);

// f(X) = number of items with a neighbor in X.
SetFunctionOracle CoverageFunction(const CoverageInstance& inst);

// H_ij = -#{v : gamma(v) = {i, j}}, the exact Hessian bound for coverage.
HessianBounds CoveragePairCounts(const CoverageInstance& inst);

// The quadratic decomposition driven by CoveragePairCounts.
Decomposition CoverageDecomposition(const CoverageInstance& inst,
                                    int cap = Caps().h_curvature);

}  // namespace hcurv

#endif  // HCURV_INSTANCES_COVERAGE_H_
