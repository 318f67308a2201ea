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
// The multilinear extension
//   F(x) = sum_X f(X) prod_{i in X} x(i) prod_{i not in X} (1 - x(i)),
// evaluated exactly from a value table or estimated by sampling.
//

#ifndef HCURV_EXTENSIONS_MULTILINEAR_H_
#define HCURV_EXTENSIONS_MULTILINEAR_H_

#include <cstdint>
#include <vector>

#include "hcurv/extensions/fractional_point.h"
#include "hcurv/setfn/config.h"
#include "hcurv/setfn/set_function.h"

namespace hcurv {

struct EstimatorConfig {
  int64_t sample_count = 1000;
  uint64_t seed = 0;

  // Hoeffding: for samples with range range_over_m * M, this many samples
  // keep |estimate - F(x)| <= epsilon * M with probability >= 1 - delta.
  static EstimatorConfig Hoeffding(double epsilon, double delta,
                                   double range_over_m, uint64_t seed);

  // Per-component budget epsilon / n, delta / n with range M, so that
  // |v^T (estimate - grad)| <= epsilon * M for every v in [0,1]^n with
  // probability >= 1 - delta. Each component marginal lies in [0, M] for a
  // monotone submodular f with max singleton value M.
  static EstimatorConfig GradientHoeffding(double epsilon, double delta, int n,
                                           uint64_t seed);
};

// Exact F(x). Builds a value table (2^n calls); refuses n above cap.
double MultilinearExact(const SetFunctionOracle& f, const FractionalPoint& x,
                        int cap = Caps().multilinear);
double MultilinearExact(const ValueTable& f, const FractionalPoint& x);

// Mean of f over cfg.sample_count independent random sets R(x).
double MultilinearSample(const SetFunctionOracle& f, const FractionalPoint& x,
                         const EstimatorConfig& cfg);

// Exact gradient: component i is F(x | x_i = 1) - F(x | x_i = 0).
std::vector<double> MultilinearGradExact(const ValueTable& f,
                                         const FractionalPoint& x);

// Sampled gradient: component i averages f(R + i) - f(R - i) over
// cfg.sample_count sets drawn from its own derived stream.
std::vector<double> MultilinearGradSample(const SetFunctionOracle& f,
                                          const FractionalPoint& x,
                                          const EstimatorConfig& cfg);

// Exact when n <= exact_cap (value table built per call), sampled otherwise.
std::vector<double> MultilinearGrad(const SetFunctionOracle& f,
                                    const FractionalPoint& x,
                                    const EstimatorConfig& cfg,
                                    int exact_cap = Caps().multilinear);

// Probability of every subset under independent inclusion with
// probabilities x, indexed by mask.
std::vector<double> InclusionProbabilities(const FractionalPoint& x);

}  // namespace hcurv

#endif  // HCURV_EXTENSIONS_MULTILINEAR_H_
