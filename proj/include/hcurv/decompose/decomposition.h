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

#ifndef HCURV_DECOMPOSE_DECOMPOSITION_H_
#define HCURV_DECOMPOSE_DECOMPOSITION_H_

#include <optional>
#include <string>

#include "hcurv/decompose/hessian.h"
#include "hcurv/decompose/ultrametric.h"
#include "hcurv/mconcave/mnat_concave.h"
#include "hcurv/setfn/config.h"
#include "hcurv/setfn/curvature.h"
#include "hcurv/setfn/set_function.h"
#include "hcurv/setfn/symmetric_matrix.h"

namespace hcurv {

// f = g + h with g monotone submodular and h M-natural concave. g is always
// the oracle f - h.
struct Decomposition {
  std::string method;
  SetFunctionOracle f;
  SetFunctionOracle g;
  MNatConcaveFn h;

  // Filled when n is small enough to enumerate (see FillCurvatures).
  std::optional<CurvatureReport> curvature;
  std::optional<double> gamma_h;

  // Quadratic pipeline only.
  std::optional<HessianBounds> bounds;
  std::optional<SymmetricMatrix> matrix;
  std::optional<LaminarQuadraticRep> laminar;
  std::optional<double> fit_error;

  // Family-specific upper bound on gamma_h, when one is known, and whether
  // the instance meets the conditions under which it is proven.
  std::optional<double> gamma_bound;
  bool bound_guaranteed = false;

  double c() const { return curvature ? curvature->c : 0.0; }
};

// gamma_h = 1 - min h(X) / f(X) over X with f(X) > 0, clamped to [0, 1].
// Sets with f(X) = 0 are skipped; returns 0 if there are none left.
// Throws CapExceededError above cap.
double HCurvature(const SetFunctionOracle& f, const MNatConcaveFn& h,
                  int cap = Caps().h_curvature);

// A_ii = 2 f(i | E - i) - 2 sum_{k != i} A_ik; the off-diagonal part is
// copied.
SymmetricMatrix CompleteDiagonal(const SetFunctionOracle& f,
                                 const SymmetricMatrix& offdiag);

// Computes c (always) and gamma_h (when n <= cap).
void FillCurvatures(Decomposition& dec, int cap = Caps().h_curvature);

// h = Modular(f(i | E - i)).
Decomposition TrivialCurvatureDecomposition(const SetFunctionOracle& f,
                                            int cap = Caps().h_curvature);

// f = h, g = 0.
Decomposition IdentityDecomposition(const MNatConcaveFn& h,
                                    int cap = Caps().h_curvature);

// Hessian bounds -> ultrametric fit -> diagonal completion -> quadratic h.
Decomposition BuildQuadraticDecomposition(const SetFunctionOracle& f,
                                          const HessianBounds& bounds,
                                          int cap = Caps().h_curvature);

// Same with generic (exhaustive) bounds.
Decomposition BuildQuadraticDecomposition(const SetFunctionOracle& f,
                                          int cap = Caps().h_curvature);

struct DecompositionCheck {
  bool ok = true;
  std::string failure;  // empty when ok
};

// Exhaustive check for n <= cap: g + h = f, g(empty) = h(empty) = 0, g
// monotone submodular and >= -tol, h exchange property and >= -tol.
// Throws CapExceededError above cap.
DecompositionCheck ValidateDecomposition(const Decomposition& dec,
                                         int cap = Caps().exchange,
                                         double tol = kTolerance);

}  // namespace hcurv

#endif  // HCURV_DECOMPOSE_DECOMPOSITION_H_
