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

#ifndef HCURV_INSTANCES_FACILITY_H_
#define HCURV_INSTANCES_FACILITY_H_

#include <vector>

#include "hcurv/decompose/decomposition.h"
#include "hcurv/setfn/config.h"
#include "hcurv/setfn/set_function.h"

namespace hcurv {

// w[i][j] is the revenue of customer i from facility j.
struct FacilityLocationInstance {
  std::vector<std::vector<double>> w;

  int n() const { return w.empty() ? 0 : static_cast<int>(w[0].size()); }
  int customers() const { return static_cast<int>(w.size()); }
};

// Throws PreconditionError unless there is at least one customer, rows
// have equal length n >= 1 and every weight is finite and >= 0.
void ValidateFacility(const FacilityLocationInstance& inst);

// f(X) = sum_i max_{j in X} w_ij, with f(empty) = 0.
SetFunctionOracle FacilityFunction(const FacilityLocationInstance& inst);

// sum_i w_i,min / sum_i w_i,max (0 when all weights vanish).
double FacilityBoundOffset(const FacilityLocationInstance& inst);

// w_i,min is subtracted from row i; l(j) = f~(j | E - j) of the reduced
// function f~, h = l + (sum_i w_i,min) [X != empty] and g = f~ - l.
// gamma_bound = c - FacilityBoundOffset.
Decomposition FacilityDecompose(const FacilityLocationInstance& inst,
                                int cap = Caps().h_curvature);

}  // namespace hcurv

#endif  // HCURV_INSTANCES_FACILITY_H_
