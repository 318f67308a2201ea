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

//
// Exhaustive oracles. These are the reference answers every other module is
// checked against, so they are deliberately simple.
//

#ifndef HCURV_SETFN_BRUTE_FORCE_H_
#define HCURV_SETFN_BRUTE_FORCE_H_

#include <optional>
#include <string>

#include "hcurv/setfn/config.h"
#include "hcurv/setfn/set_function.h"

namespace hcurv {

struct SubsetValue {
  Subset set;
  double value = 0.0;
};

// Lexicographically smallest maximizer of f over |X| <= k. Values within
// kTolerance of the best are treated as ties.
SubsetValue BruteForceMax(const SetFunctionOracle& f, int k,
                          int cap = Caps().brute_force);

// Same, over |X| == k exactly.
SubsetValue BruteForceMaxExact(const SetFunctionOracle& f, int k,
                               int cap = Caps().brute_force);

struct MonotoneSubmodularWitness {
  enum class Kind { kMonotonicity, kSubmodularity };
  Kind kind = Kind::kMonotonicity;
  Subset x;
  int i = -1;
  int j = -1;  // -1 for monotonicity violations
  // f(i | X) for monotonicity, Hess_f(X)_ij for submodularity.
  double value = 0.0;

  std::string ToString() const;
};

struct MonotoneSubmodularCheck {
  bool ok = true;
  std::optional<MonotoneSubmodularWitness> witness;
};

// Checks f(i | X) >= -tol and Hess_f(X)_ij <= tol for every X and i, j not in
// X. Subsets are scanned in LexLess order and the first violation is
// reported. Pass check_monotone = false to test submodularity only.
MonotoneSubmodularCheck VerifyMonotoneSubmodular(const SetFunctionOracle& f,
                                                 int cap = Caps().verify,
                                                 bool check_monotone = true,
                                                 double tol = kTolerance);

// Minimum of f over all subsets (used for nonnegativity checks).
SubsetValue BruteForceMin(const SetFunctionOracle& f,
                          int cap = Caps().brute_force);

}  // namespace hcurv

#endif  // HCURV_SETFN_BRUTE_FORCE_H_
