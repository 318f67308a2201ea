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

#include "hcurv/decompose/hessian.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hcurv/setfn/errors.h"

namespace hcurv {

double DiscreteHessian(const SetFunctionOracle& f, Subset x, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= f.n() || j >= f.n()) {
    throw PreconditionError("DiscreteHessian: need distinct elements in range");
  }
  if (x.Contains(i) || x.Contains(j)) {
    throw PreconditionError("DiscreteHessian: elements must lie outside " +
                            ToString(x));
  }
  return f.Value(x.With(i).With(j)) + f.Value(x) - f.Value(x.With(i)) -
         f.Value(x.With(j));
}

HessianBounds HessianBounds::UserSupplied(SymmetricMatrix h, double tol) {
  const int n = h.n();
  for (int i = 0; i < n; ++i) {
    if (std::abs(h(i, i)) > tol) {
      throw PreconditionError("Hessian bounds need a zero diagonal");
    }
    for (int j = i + 1; j < n; ++j) {
      if (!std::isfinite(h(i, j)) || h(i, j) > tol) {
        std::ostringstream msg;
        msg << "Hessian bound H(" << i << "," << j << ") = " << h(i, j)
            << " must be finite and <= 0";
        throw PreconditionError(msg.str());
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    h.Set(i, i, 0.0);
    for (int j = i + 1; j < n; ++j) h.Set(i, j, std::min(0.0, h(i, j)));
  }
  return {std::move(h), Source::kUserSupplied};
}

std::string_view SourceName(HessianBounds::Source source) {
  switch (source) {
    case HessianBounds::Source::kGenericBruteForce:
      return "generic";
    case HessianBounds::Source::kCoverageClosedForm:
      return "coverage";
    case HessianBounds::Source::kUserSupplied:
      return "user";
  }
  return "";
}

HessianBounds GenericHessianBounds(const SetFunctionOracle& f, int cap,
                                   double tol) {
  const int n = f.n();
  if (n > cap) throw CapExceededError("GenericHessianBounds", n, cap);
  const ValueTable table = ValueTable::Build(f);
  const uint64_t count = uint64_t{1} << n;
  SymmetricMatrix h(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const uint64_t bi = uint64_t{1} << i;
      const uint64_t bj = uint64_t{1} << j;
      double best = -std::numeric_limits<double>::infinity();
      for (uint64_t m = 0; m < count; ++m) {
        if (m & (bi | bj)) continue;
        const Subset x = Subset::FromMask(m);
        const double hess = table[Subset::FromMask(m | bi | bj)] + table[x] -
                            table[Subset::FromMask(m | bi)] -
                            table[Subset::FromMask(m | bj)];
        best = std::max(best, hess);
      }
      if (best > tol) {
        std::ostringstream msg;
        msg << "GenericHessianBounds: Hessian entry (" << i << "," << j
            << ") reaches " << best << " > 0; f is not submodular";
        throw PreconditionError(msg.str());
      }
      h.Set(i, j, std::min(0.0, best));
    }
  }
  return {std::move(h), HessianBounds::Source::kGenericBruteForce};
}

}  // namespace hcurv
