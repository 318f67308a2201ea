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

#ifndef HCURV_DECOMPOSE_HESSIAN_H_
#define HCURV_DECOMPOSE_HESSIAN_H_

#include <string_view>

#include "hcurv/setfn/config.h"
#include "hcurv/setfn/set_function.h"
#include "hcurv/setfn/symmetric_matrix.h"

namespace hcurv {

// Hess_f(X)_ij = f(X + i + j) + f(X) - f(X + i) - f(X + j). Four oracle
// calls. Requires i != j and i, j not in X.
double DiscreteHessian(const SetFunctionOracle& f, Subset x, int i, int j);

// Upper bounds H_ij >= max_X Hess_f(X)_ij with zero diagonal and H <= 0.
struct HessianBounds {
  enum class Source { kGenericBruteForce, kCoverageClosedForm, kUserSupplied };

  SymmetricMatrix h;
  Source source = Source::kUserSupplied;

  // Validates symmetry, zero diagonal and nonpositive off-diagonal entries.
  static HessianBounds UserSupplied(SymmetricMatrix h, double tol = kTolerance);
};

std::string_view SourceName(HessianBounds::Source source);

// H_ij = max over X in E - i - j of Hess_f(X)_ij, by exhaustive search over
// a value table. Throws CapExceededError above cap and PreconditionError if
// some Hessian entry is positive (f is not submodular).
HessianBounds GenericHessianBounds(const SetFunctionOracle& f,
                                   int cap = Caps().hessian,
                                   double tol = kTolerance);

}  // namespace hcurv

#endif  // HCURV_DECOMPOSE_HESSIAN_H_
