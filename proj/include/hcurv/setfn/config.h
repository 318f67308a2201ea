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

#ifndef HCURV_SETFN_CONFIG_H_
#define HCURV_SETFN_CONFIG_H_

namespace hcurv {

// Absolute tolerance for every real-valued comparison in the library.
inline constexpr double kTolerance = 1e-9;

// Enumeration caps for the exhaustive routines. These are defaults; every
// routine that enumerates takes its cap as an argument.
struct Caps {
  int brute_force = 20;   // BruteForceMax
  int verify = 12;        // VerifyMonotoneSubmodular
  int exchange = 10;      // CheckExchangeProperty
  int multilinear = 16;   // MultilinearExact and exact gradients
  int lp = 16;            // ConcaveClosure
  int hessian = 10;       // GenericHessianBounds
  int h_curvature = 14;   // HCurvature
};

}  // namespace hcurv

#endif  // HCURV_SETFN_CONFIG_H_
