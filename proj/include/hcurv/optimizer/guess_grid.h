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

#ifndef HCURV_OPTIMIZER_GUESS_GRID_H_
#define HCURV_OPTIMIZER_GUESS_GRID_H_

#include <vector>

#include "hcurv/mconcave/mnat_concave.h"
#include "hcurv/setfn/set_function.h"

namespace hcurv {

// max(g({i}), h({i})) over all i; 2n oracle calls.
double MaxSingletonValue(const SetFunctionOracle& g, const MNatConcaveFn& h);

// Sorted union of {i * eps * M : i = 0..floor(1/eps)} and
// {(1 + eps/n)^i * M : i = 0..floor(log_{1+eps/n} n)}. Just {0} when M = 0.
std::vector<double> GuessValues(double m, int n, double epsilon);

// Candidate guesses for g(O) (alpha) and h(O) (beta). Both use the same M.
struct GuessGrid {
  double m = 0.0;
  std::vector<double> alpha;
  std::vector<double> beta;
};

GuessGrid MakeGuessGrid(const SetFunctionOracle& g, const MNatConcaveFn& h,
                        double epsilon);

}  // namespace hcurv

#endif  // HCURV_OPTIMIZER_GUESS_GRID_H_
