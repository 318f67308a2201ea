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

#ifndef HCURV_OPTIMIZER_CONTINUOUS_GREEDY_H_
#define HCURV_OPTIMIZER_CONTINUOUS_GREEDY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcurv/extensions/fractional_point.h"
#include "hcurv/mconcave/mnat_concave.h"
#include "hcurv/setfn/config.h"
#include "hcurv/setfn/set_function.h"

namespace hcurv {

struct SolverConfig {
  double epsilon = 0.1;
  // Time step; 0 means epsilon / n^2. Rounded down so that 1 / delta_t is
  // an integer.
  double delta_t = 0.0;
  int trials = 10;
  uint64_t seed = 0;
  // Use brute-force g(O), h(O) instead of the guess grid.
  bool oracle_mode = false;
  int oracle_cap = Caps().brute_force;

  // Gradients and G(x) are exact (value table) up to this n and sampled
  // above it.
  int exact_gradient_cap = 12;
  // Samples per gradient component; 0 means the Hoeffding count for
  // (epsilon, gradient_fail_probability).
  int64_t gradient_samples = 0;
  double gradient_fail_probability = 0.05;

  // Witness combinations are reduced to at most n + 1 sets once their
  // support exceeds compaction_factor * n.
  int compaction_factor = 4;

  // Worker threads for grid cells; 0 means hardware concurrency.
  int threads = 0;

  // Throws PreconditionError on bad values.
  void Validate() const;
  // Number of time steps, ceil(1 / delta_t).
  int Steps(int n) const;
  double DefaultDeltaT(int n) const;
};

// G(x) and its gradient for one g, exact or sampled per SolverConfig.
class MultilinearOracle {
 public:
  MultilinearOracle(const SetFunctionOracle& g, const SolverConfig& cfg);

  bool exact() const { return table_.has_value(); }
  int n() const { return g_.n(); }
  int64_t samples() const { return samples_; }

  // stream selects the random stream in sampled mode.
  std::vector<double> Gradient(const FractionalPoint& x, uint64_t stream) const;
  double Value(const FractionalPoint& x, uint64_t stream) const;

 private:
  SetFunctionOracle g_;
  std::optional<ValueTable> table_;
  int64_t samples_ = 0;
};

struct StepLog {
  double lin = 0.0;      // v^T grad
  double clo = 0.0;      // sum lambda h(Y) of the step's witness
  double g_value = 0.0;  // G(x(t)) (exact or estimated)
};

struct TrajectoryWitness {
  FractionalPoint x;
  ConvexCombination combination;
  std::vector<StepLog> steps;
  double delta_t = 0.0;
  // min over steps of lin + G(x(t)): the largest alpha the run supports.
  double alpha_attained = 0.0;

  // sum_t delta_t * clo_t.
  double ClosureLowerBound() const;
};

// Carathéodory reduction: returns an equivalent combination (same point,
// same total weight) with at most n + 1 sets whose sum lambda h(Y) is not
// smaller.
ConvexCombination ReduceSupport(const ConvexCombination& comb,
                                const MNatConcaveFn& h, int n);

// x(0) = 0, x(t + delta) = x(t) + delta * v(t) with v(t) from
// ParetoDirection(grad G(x(t)), h, k, alpha - G(x(t)) - slack, beta).
// Returns nullopt as soon as some step has no feasible direction. Pass
// alpha = -infinity to constrain only beta. slack is 1e-9 * max(1, M) for
// exact gradients and epsilon * M for sampled ones.
std::optional<TrajectoryWitness> ContinuousGreedyRun(
    const MultilinearOracle& g, const MNatConcaveFn& h, int k, double alpha,
    double beta, const SolverConfig& cfg, double m, uint64_t seed);

}  // namespace hcurv

#endif  // HCURV_OPTIMIZER_CONTINUOUS_GREEDY_H_
