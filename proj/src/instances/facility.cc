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

#include "hcurv/instances/facility.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "hcurv/setfn/errors.h"

namespace hcurv {
namespace {

SetFunctionOracle MaxRevenue(std::vector<std::vector<double>> w, int n,
                             std::string name) {
  return SetFunctionOracle(
      n,
      [w = std::move(w)](Subset x) {
        if (x.Size() == 0) return 0.0;
        double total = 0.0;
        for (const auto& row : w) {
          double best = 0.0;
          x.ForEach([&](int j) { best = std::max(best, row[j]); });
          total += best;
        }
        return total;
      },
      std::move(name));
}

}  // namespace

void ValidateFacility(const FacilityLocationInstance& inst) {
  if (inst.w.empty()) throw PreconditionError("facility: no customers");
  const int n = inst.n();
  GroundSet ground(n);
  for (size_t i = 0; i < inst.w.size(); ++i) {
    if (static_cast<int>(inst.w[i].size()) != n) {
      throw PreconditionError("facility: row " + std::to_string(i) +
                              " has the wrong length");
    }
    for (double v : inst.w[i]) {
      if (!std::isfinite(v) || v < 0.0) {
        throw PreconditionError("facility: weights must be finite and >= 0");
      }
    }
  }
}

SetFunctionOracle FacilityFunction(const FacilityLocationInstance& inst) {
  ValidateFacility(inst);
  return MaxRevenue(inst.w, inst.n(), "facility");
}

double FacilityBoundOffset(const FacilityLocationInstance& inst) {
  ValidateFacility(inst);
  double lo = 0.0;
  double hi = 0.0;
  for (const auto& row : inst.w) {
    lo += *std::min_element(row.begin(), row.end());
    hi += *std::max_element(row.begin(), row.end());
  }
  return hi > 0.0 ? lo / hi : 0.0;
}

Decomposition FacilityDecompose(const FacilityLocationInstance& inst,
                                int cap) {
  ValidateFacility(inst);
  const int n = inst.n();
  std::vector<std::vector<double>> reduced = inst.w;
  double c0 = 0.0;
  for (auto& row : reduced) {
    const double lo = *std::min_element(row.begin(), row.end());
    c0 += lo;
    for (double& v : row) v -= lo;
  }
  const SetFunctionOracle f_reduced = MaxRevenue(reduced, n, "f_reduced");
  const Subset full = Subset::Full(n);
  const double top = f_reduced.Value(full);
  std::vector<double> ell(n);
  for (int j = 0; j < n; ++j) {
    ell[j] = std::max(0.0, top - f_reduced.Value(full.Without(j)));
  }
  const MNatConcaveFn h = MNatConcaveFn::ModularIndicator(ell, c0);
  const SetFunctionOracle f = FacilityFunction(inst);
  SetFunctionOracle g = Difference(f_reduced, ModularFunction(ell), "g");
  Decomposition dec{"facility", f, std::move(g), h, {}, {}, {}, {}, {}, {},
                    {}, false};
  FillCurvatures(dec, cap);
  if (dec.curvature) {
    dec.gamma_bound = dec.curvature->c - FacilityBoundOffset(inst);
    dec.bound_guaranteed = true;
  }
  return dec;
}

}  // namespace hcurv
