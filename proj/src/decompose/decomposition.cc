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

#include "hcurv/decompose/decomposition.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "hcurv/mconcave/exchange.h"
#include "hcurv/setfn/brute_force.h"
#include "hcurv/setfn/errors.h"

namespace hcurv {
namespace {

// f(i | E - i) for every i.
std::vector<double> TailMarginals(const SetFunctionOracle& f) {
  const Subset full = Subset::Full(f.n());
  const double top = f.Value(full);
  std::vector<double> out(f.n());
  for (int i = 0; i < f.n(); ++i) out[i] = top - f.Value(full.Without(i));
  return out;
}

Decomposition Assemble(std::string method, const SetFunctionOracle& f,
                       MNatConcaveFn h) {
  SetFunctionOracle g = Difference(f, h.AsOracle(), "g");
  return Decomposition{std::move(method), f, std::move(g), std::move(h),
                       {}, {}, {}, {}, {}, {}, {}, false};
}

}  // namespace

double HCurvature(const SetFunctionOracle& f, const MNatConcaveFn& h,
                  int cap) {
  const int n = f.n();
  if (n > cap) throw CapExceededError("HCurvature", n, cap);
  if (h.n() != n) throw PreconditionError("HCurvature: ground sets differ");
  double min_ratio = std::numeric_limits<double>::infinity();
  const uint64_t count = uint64_t{1} << n;
  for (uint64_t m = 1; m < count; ++m) {
    const Subset x = Subset::FromMask(m);
    const double fx = f.Value(x);
    if (fx <= kTolerance) continue;
    min_ratio = std::min(min_ratio, h.Value(x) / fx);
  }
  if (!std::isfinite(min_ratio)) return 0.0;
  return std::clamp(1.0 - min_ratio, 0.0, 1.0);
}

SymmetricMatrix CompleteDiagonal(const SetFunctionOracle& f,
                                 const SymmetricMatrix& offdiag) {
  const int n = f.n();
  if (offdiag.n() != n) {
    throw PreconditionError("CompleteDiagonal: dimension mismatch");
  }
  const std::vector<double> tail = TailMarginals(f);
  SymmetricMatrix a = offdiag;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int k = 0; k < n; ++k) {
      if (k != i) row += offdiag(i, k);
    }
    a.Set(i, i, 2.0 * tail[i] - 2.0 * row);
  }
  return a;
}

void FillCurvatures(Decomposition& dec, int cap) {
  // c is undefined when every singleton is zero.
  bool any_positive = false;
  for (int i = 0; i < dec.f.n(); ++i) {
    any_positive = any_positive || dec.f.Value(Subset().With(i)) > kTolerance;
  }
  if (any_positive) dec.curvature = TotalCurvature(dec.f);
  if (dec.f.n() <= cap) dec.gamma_h = HCurvature(dec.f, dec.h, cap);
}

Decomposition TrivialCurvatureDecomposition(const SetFunctionOracle& f,
                                            int cap) {
  Decomposition dec =
      Assemble("trivial", f, MNatConcaveFn::Modular(TailMarginals(f)));
  FillCurvatures(dec, cap);
  return dec;
}

Decomposition IdentityDecomposition(const MNatConcaveFn& h, int cap) {
  Decomposition dec = Assemble("identity", h.AsOracle("f"), h);
  FillCurvatures(dec, cap);
  return dec;
}

Decomposition BuildQuadraticDecomposition(const SetFunctionOracle& f,
                                          const HessianBounds& bounds,
                                          int cap) {
  if (bounds.h.n() != f.n()) {
    throw PreconditionError("BuildQuadraticDecomposition: bounds dimension");
  }
  UltrametricFit fit = FitUltrametric(bounds.h);
  SymmetricMatrix a = CompleteDiagonal(f, fit.a);
  LaminarQuadraticRep laminar = LaminarFromUltrametric(a);
  Decomposition dec = Assemble("quadratic", f, MNatConcaveFn::Quadratic(a));
  dec.bounds = bounds;
  dec.matrix = std::move(a);
  dec.laminar = std::move(laminar);
  dec.fit_error = fit.error;
  FillCurvatures(dec, cap);
  return dec;
}

Decomposition BuildQuadraticDecomposition(const SetFunctionOracle& f,
                                          int cap) {
  return BuildQuadraticDecomposition(f, GenericHessianBounds(f), cap);
}

DecompositionCheck ValidateDecomposition(const Decomposition& dec, int cap,
                                         double tol) {
  const int n = dec.f.n();
  if (n > cap) throw CapExceededError("ValidateDecomposition", n, cap);
  auto fail = [](std::string why) { return DecompositionCheck{false, why}; };

  const ValueTable f = ValueTable::Build(dec.f);
  const ValueTable g = ValueTable::Build(dec.g);
  const ValueTable h = ValueTable::Build(dec.h.AsOracle());
  if (std::abs(g[Subset()]) > tol || std::abs(h[Subset()]) > tol) {
    return fail("g(empty) or h(empty) is nonzero");
  }
  const uint64_t count = uint64_t{1} << n;
  for (uint64_t m = 0; m < count; ++m) {
    const Subset x = Subset::FromMask(m);
    if (std::abs(g[x] + h[x] - f[x]) > tol) {
      return fail("g + h != f at " + ToString(x));
    }
    if (g[x] < -tol) return fail("g negative at " + ToString(x));
    if (h[x] < -tol) return fail("h negative at " + ToString(x));
  }
  const MonotoneSubmodularCheck gcheck =
      VerifyMonotoneSubmodular(g.AsOracle("g"), cap, true, tol);
  if (!gcheck.ok) return fail("g: " + gcheck.witness->ToString());
  const ExchangeCheck hcheck = CheckExchangeProperty(h, tol);
  if (!hcheck.ok) return fail("h exchange: " + hcheck.witness->ToString());
  return {};
}

}  // namespace hcurv
