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

#include "hcurv/optimizer/maximize.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>
#include <utility>

#include "hcurv/mconcave/greedy.h"
#include "hcurv/optimizer/guess_grid.h"
#include "hcurv/optimizer/swap_round.h"
#include "hcurv/setfn/brute_force.h"
#include "hcurv/setfn/errors.h"
#include "hcurv/setfn/random.h"

namespace hcurv {
namespace {

constexpr uint64_t kTrajectoryStream = 0x7472616a;
constexpr uint64_t kRoundingStream = 0x726f756e;
constexpr double kValueTie = 1e-12;

struct CellOutcome {
  std::optional<TrajectoryWitness> trajectory;
  Subset best;
  double best_value = -1.0;
  double mean_f = 0.0;
  double mean_g = 0.0;
  double mean_h = 0.0;
};

// True when (value, set) should replace (best_value, best).
bool Better(double value, Subset set, double best_value, Subset best) {
  if (value > best_value + kValueTie) return true;
  return value >= best_value - kValueTie && LexLess(set, best);
}

CellOutcome RunCell(const MultilinearOracle& g_ext, const SetFunctionOracle& g,
                    const MNatConcaveFn& h, int k, double alpha, double beta,
                    const SolverConfig& cfg, double m, uint64_t cell_seed) {
  CellOutcome out;
  out.trajectory = ContinuousGreedyRun(g_ext, h, k, alpha, beta, cfg, m,
                                       DeriveSeed(cell_seed, kTrajectoryStream));
  if (!out.trajectory) return out;
  const uint64_t rounding_seed = DeriveSeed(cell_seed, kRoundingStream);
  bool have = false;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const Subset x = SwapRound(h, out.trajectory->combination,
                               DeriveSeed(rounding_seed, trial));
    const double gv = g.Value(x);
    const double hv = h.Value(x);
    out.mean_g += gv;
    out.mean_h += hv;
    out.mean_f += gv + hv;
    if (!have || Better(gv + hv, x, out.best_value, out.best)) {
      out.best = x;
      out.best_value = gv + hv;
      have = true;
    }
  }
  out.mean_f /= cfg.trials;
  out.mean_g /= cfg.trials;
  out.mean_h /= cfg.trials;
  return out;
}

void Record(const CellOutcome& cell, double alpha, double beta,
            const MultilinearOracle& g_ext, MaximizeResult& result) {
  const TrajectoryWitness& traj = *cell.trajectory;
  result.set = cell.best;
  result.value = cell.best_value;
  MaximizeDiagnostics& d = result.diagnostics;
  d.alpha = alpha;
  d.beta = beta;
  d.step_log = traj.steps;
  d.support_size = traj.combination.terms.size();
  d.closure_lower_bound = traj.ClosureLowerBound();
  d.multilinear_g = g_ext.Value(traj.x, 0);
  d.mean_f = cell.mean_f;
  d.mean_g = cell.mean_g;
  d.mean_h = cell.mean_h;
}

int WorkerCount(const SolverConfig& cfg, size_t cells) {
  int threads = cfg.threads;
  if (threads == 0) {
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  return std::max(1, std::min<int>(threads, static_cast<int>(cells)));
}

}  // namespace

double GammaApproximationBound(double gamma_h, double epsilon) {
  return 1.0 - gamma_h / std::numbers::e - epsilon;
}

double CurvatureApproximationBound(double c) {
  return 1.0 - c / std::numbers::e;
}

MaximizeResult Maximize(const SetFunctionOracle& g, const MNatConcaveFn& h,
                        int k, const SolverConfig& cfg) {
  cfg.Validate();
  const int n = g.n();
  if (h.n() != n) throw PreconditionError("g and h ground sets differ");
  if (k < 0 || k > n) throw PreconditionError("cardinality outside [0, n]");

  const int64_t g_calls0 = g.calls();
  const int64_t h_calls0 = h.calls();
  MaximizeResult result;
  MaximizeDiagnostics& d = result.diagnostics;
  d.oracle_mode = cfg.oracle_mode;
  d.epsilon = cfg.epsilon;
  d.trials = cfg.trials;
  d.steps = cfg.Steps(n);
  d.delta_t = 1.0 / d.steps;
  if (cfg.delta_t > cfg.DefaultDeltaT(n) * (1.0 + 1e-12)) {
    d.warnings.push_back("delta_t is larger than epsilon / n^2");
  }
  if (k == 0) {
    result.value = g.Value(Subset()) + h.Value(Subset());
    return result;
  }

  d.m = MaxSingletonValue(g, h);
  const MultilinearOracle g_ext(g, cfg);
  d.exact_gradient = g_ext.exact();
  d.gradient_samples = g_ext.samples();

  bool done = false;
  if (cfg.oracle_mode) {
    const SetFunctionOracle f = Sum(g, h.AsOracle(), "f");
    const Subset o = BruteForceMaxExact(f, k, cfg.oracle_cap).set;
    d.oracle_set = o;
    const double alpha = g.Value(o);
    const double beta = h.Value(o);
    d.grid_size = 1;
    d.cells_run = 1;
    const CellOutcome cell =
        RunCell(g_ext, g, h, k, alpha, beta, cfg, d.m, DeriveSeed(cfg.seed, 0));
    if (cell.trajectory) {
      d.cells_feasible = 1;
      Record(cell, alpha, beta, g_ext, result);
      done = true;
    } else {
      d.warnings.push_back(
          "oracle guesses infeasible under sampled gradients; using the grid");
    }
  }

  if (!done) {
    const std::vector<double> values = GuessValues(d.m, n, cfg.epsilon);
    const double h_max = GreedyMaxCard(h, k).value;
    std::vector<double> betas;
    for (auto it = values.rbegin(); it != values.rend(); ++it) {
      if (*it <= h_max + 1e-9 * std::max(1.0, d.m)) betas.push_back(*it);
    }
    d.grid_size = betas.size();
    d.cells_run += static_cast<int>(betas.size());

    std::vector<CellOutcome> cells(betas.size());
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto work = [&] {
      while (true) {
        const size_t c = next.fetch_add(1);
        if (c >= betas.size()) return;
        try {
          cells[c] = RunCell(g_ext, g, h, k,
                             -std::numeric_limits<double>::infinity(), betas[c],
                             cfg, d.m, DeriveSeed(cfg.seed, c + 1));
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    };
    const int workers = WorkerCount(cfg, betas.size());
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    int chosen = -1;
    for (size_t c = 0; c < cells.size(); ++c) {
      if (!cells[c].trajectory) continue;
      ++d.cells_feasible;
      if (chosen < 0 || Better(cells[c].best_value, cells[c].best,
                               cells[chosen].best_value, cells[chosen].best)) {
        chosen = static_cast<int>(c);
      }
    }
    if (chosen < 0) {
      throw IntegrityError("Maximize: no feasible guess, including beta = 0");
    }
    // The largest alpha guess the trajectory supports.
    const double attained = cells[chosen].trajectory->alpha_attained;
    double alpha = 0.0;
    for (double v : values) {
      if (v <= attained + 1e-9 * std::max(1.0, d.m)) alpha = std::max(alpha, v);
    }
    Record(cells[chosen], alpha, betas[chosen], g_ext, result);
  }

  d.g_calls = g.calls() - g_calls0;
  d.h_calls = h.calls() - h_calls0;
  return result;
}

}  // namespace hcurv
