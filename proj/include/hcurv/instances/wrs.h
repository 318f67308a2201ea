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

#ifndef HCURV_INSTANCES_WRS_H_
#define HCURV_INSTANCES_WRS_H_

#include <vector>

#include "hcurv/decompose/decomposition.h"
#include "hcurv/mconcave/matroid.h"
#include "hcurv/setfn/config.h"
#include "hcurv/setfn/set_function.h"

namespace hcurv {

// f(X) = sum_i alpha_i max{w_i(I) : I subset of X independent in M_i}.
// An empty coefficient list means all ones.
struct WeightedRankSumInstance {
  int n = 0;
  std::vector<Matroid> matroids;
  std::vector<std::vector<double>> weights;
  std::vector<double> coefficients;

  double Coefficient(int i) const {
    return coefficients.empty() ? 1.0 : coefficients[i];
  }
  // alpha_i w_i.
  std::vector<double> ScaledWeights(int i) const;
};

// Throws PreconditionError on mismatched sizes, negative weights,
// nonpositive coefficients or a matroid of rank 0.
void ValidateWrs(const WeightedRankSumInstance& inst);

SetFunctionOracle WrsFunction(const WeightedRankSumInstance& inst);

// sum_i alpha_i w_i,min / sum_i alpha_i w_i(B_i) over maximum-weight
// bases B_i.
double WrsBoundOffset(const WeightedRankSumInstance& inst);

// Each matroid term splits as alpha_i w_i,min r_i + (the reduced weighted
// rank). h collects l(j) = f~(j | E - j) of the reduced sum together with
// the terms w_min r_i of uniform and partition matroids whose blocks keep
// the family laminar; everything else stays in g = f - h. When every
// matroid is loopless of rank 1 this is l + (sum w_min) [X != empty].
// gamma_bound = c - WrsBoundOffset, flagged guaranteed when every matroid
// is loopless, coloop-free and absorbed into h.
Decomposition WrsDecompose(const WeightedRankSumInstance& inst,
                           int cap = Caps().h_curvature);

// h = alpha_d w_d-rank of the dominant matroid d (largest alpha_i w_i(B_i),
// ties to the lower index) and g = f - h. gamma_bound = G / (G + alpha_d
// min_e w_d(e)) with G = g(E), guaranteed when M_d is loopless.
Decomposition MixtureDecompose(const WeightedRankSumInstance& inst,
                               int cap = Caps().h_curvature);

}  // namespace hcurv

#endif  // HCURV_INSTANCES_WRS_H_
