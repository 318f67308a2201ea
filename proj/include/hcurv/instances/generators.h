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

#ifndef HCURV_INSTANCES_GENERATORS_H_
#define HCURV_INSTANCES_GENERATORS_H_

#include <cstdint>

#include "hcurv/instances/coverage.h"
#include "hcurv/instances/facility.h"
#include "hcurv/instances/wrs.h"

namespace hcurv {

// Each item picks every element independently with probability density;
// an item that picks nothing gets one uniform element.
CoverageInstance GenerateCoverage(int n, int items, double density,
                                  uint64_t seed);

// Integer weights uniform on [lo, hi].
FacilityLocationInstance GenerateFacility(int n, int customers, int lo,
                                          int hi, uint64_t seed);

struct WrsParams {
  int n = 8;
  int partition_matroids = 3;
  bool with_uniform = true;
  int weight_lo = 1;
  int weight_hi = 10;
};

// Partition matroids whose blocks refine one another (so all blocks form a
// laminar family), optionally followed by a uniform matroid. Blocks have at
// least two elements and capacities in [1, |B| - 1], so every matroid is
// loopless and coloop-free. Integer weights, unit coefficients.
WeightedRankSumInstance GenerateWrs(const WrsParams& params, uint64_t seed);

}  // namespace hcurv

#endif  // HCURV_INSTANCES_GENERATORS_H_
