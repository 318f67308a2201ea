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

#ifndef HCURV_OPTIMIZER_MAXIMIZE_H_
#define HCURV_OPTIMIZER_MAXIMIZE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcurv/mconcave/mnat_concave.h"
#include "hcurv/optimizer/continuous_greedy.h"
#include "hcurv/setfn/set_function.h"
#include "hcurv/setfn/subset.h"

namespace hcurv {

struct MaximizeDiagnostics {
  bool oracle_mode = false;
  std::optional<Subset> oracle_set;  // O in oracle mode
  double m = 0.0;
  double epsilon = 0.0;
  double delta_t = 0.0;
  int steps = 0;
  bool exact_gradient = true;
  int64_t gradient_samples = 0;

  size_t grid_size = 0;     // beta guesses considered
  int cells_run = 0;        // trajectories started
  int cells_feasible = 0;   // trajectories that finished

  // The cell that produced the returned set.
  double alpha = 0.0;  // guess of g(O); attained value in grid mode
  double beta = 0.0;   // guess of h(O)
  std::vector<StepLog> step_log;
  size_t support_size = 0;
  double closure_lower_bound = 0.0;  // sum_t delta_t * clo_t
  double multilinear_g = 0.0;        // G(x(1)) (exact or estimated)
  double mean_f = 0.0;
  double mean_g = 0.0;
  double mean_h = 0.0;
  int trials = 0;

  int64_t g_calls = 0;
  int64_t h_calls = 0;
  std::vector<std::string> warnings;
};

struct MaximizeResult {
  Subset set;
  double value = 0.0;  // f(set)
  MaximizeDiagnostics diagnostics;
};

// Maximizes f = g + h over |X| = k: continuous greedy over the guess grid
// (or brute-force guesses in oracle mode), then cfg.trials swap roundings
// per feasible trajectory. Returns the best sampled set, ties broken by
// LexLess. For each beta one trajectory is run with the direction of largest
// linear gain among those with closure value >= beta, which meets every
// alpha threshold any direction could.
MaximizeResult Maximize(const SetFunctionOracle& g, const MNatConcaveFn& h,
                        int k, const SolverConfig& cfg);

// 1 - gamma_h / e - epsilon.
double GammaApproximationBound(double gamma_h, double epsilon);
// 1 - c / e.
double CurvatureApproximationBound(double c);

}  // namespace hcurv

#endif  // HCURV_OPTIMIZER_MAXIMIZE_H_
