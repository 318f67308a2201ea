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

#include "hcurv/setfn/curvature.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hcurv/setfn/config.h"
#include "hcurv/setfn/errors.h"

namespace hcurv {

CurvatureReport TotalCurvature(const SetFunctionOracle& f) {
  const int n = f.n();
  const Subset full = Subset::Full(n);
  const double empty = f.Value(Subset());
  const double top = f.Value(full);

  CurvatureReport report;
  report.per_element_ratios.resize(n);
  double min_ratio = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double first = f.Value(Subset().With(i)) - empty;
    const double last = top - f.Value(full.Without(i));
    if (std::abs(first) <= kTolerance) {
      report.zero_singletons.push_back(i);
      continue;
    }
    const double ratio = last / first;
    report.per_element_ratios[i] = ratio;
    if (ratio < min_ratio) {
      min_ratio = ratio;
      report.argmin_element = i;
    }
  }
  if (report.argmin_element < 0) {
    throw PreconditionError("TotalCurvature: every singleton has value zero");
  }
  report.c = std::clamp(1.0 - min_ratio, 0.0, 1.0);
  return report;
}

}  // namespace hcurv
