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

#ifndef HCURV_SETFN_CURVATURE_H_
#define HCURV_SETFN_CURVATURE_H_

#include <optional>
#include <vector>

#include "hcurv/setfn/set_function.h"

namespace hcurv {

// Total curvature c = 1 - min_i f(i | E - i) / f(i).
struct CurvatureReport {
  double c = 0.0;
  int argmin_element = -1;
  // f(i | E - i) / f(i); empty for elements with f(i) = 0, which are
  // excluded from the minimum and listed in zero_singletons.
  std::vector<std::optional<double>> per_element_ratios;
  std::vector<int> zero_singletons;
};

// Uses at most 2n + 2 oracle calls. Throws PreconditionError when every
// singleton has value zero.
CurvatureReport TotalCurvature(const SetFunctionOracle& f);

}  // namespace hcurv

#endif  // HCURV_SETFN_CURVATURE_H_
