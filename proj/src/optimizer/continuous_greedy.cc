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

#include "hcurv/optimizer/continuous_greedy.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "hcurv/extensions/multilinear.h"
#include "hcurv/optimizer/pareto.h"
#include "hcurv/setfn/errors.h"
#include "hcurv/setfn/random.h"

namespace hcurv {
namespace {

// A nonzero mu with sum_t mu_t 1_{Y_t} = 0 and sum_t mu_t = 0 over the
// first n + 2 terms.
std::vector<double> NullCombination(const std::vector<ConvexCombination::Term>& terms,
                                    int n) {
  const int rows = n + 1;
  const int cols = n + 2;
  std::vector<std::vector<double>> m(rows, std::vector<double>(cols, 0.0));
  for (int c = 0; c < cols; ++c) {
    terms[c].set.ForEach([&](int i) { m[i][c] = 1.0; });
    m[n][c] = 1.0;
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int best = r;
    for (int i = r + 1; i < rows; ++i) {
      if (std::abs(m[i][c]) > std::abs(m[best][c])) best = i;
    }
    if (std::abs(m[best][c]) < 1e-12) continue;
    std::swap(m[r], m[best]);
    const double inv = 1.0 / m[r][c];
    for (double& v : m[r]) v *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0.0) continue;
      const double factor = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  int free_col = 0;
  for (int c = 0; c < cols; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) {
      free_col = c;
      break;
    }
  }
  std::vector<double> mu(cols, 0.0);
  mu[free_col] = 1.0;
  for (size_t p = 0; p < pivot_col.size(); ++p) {
    mu[pivot_col[p]] = -m[p][free_col];
  }
  return mu;
}

}  // namespace

void SolverConfig::Validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw PreconditionError("epsilon must lie in (0, 1)");
  }
  if (!(delta_t >= 0.0 && delta_t <= 1.0)) {
    throw PreconditionError("delta_t must lie in [0, 1]");
  }
  if (trials < 1) throw PreconditionError("trials must be positive");
  if (gradient_samples < 0) {
    throw PreconditionError("gradient_samples must be >= 0");
  }
  if (!(gradient_fail_probability > 0.0 && gradient_fail_probability < 1.0)) {
    throw PreconditionError("gradient_fail_probability must lie in (0, 1)");
  }
  if (compaction_factor < 1) {
    throw PreconditionError("compaction_factor must be positive");
  }
  if (threads < 0) throw PreconditionError("threads must be >= 0");
}

double SolverConfig::DefaultDeltaT(int n) const {
  return epsilon / (static_cast<double>(n) * n);
}

int SolverConfig::Steps(int n) const {
  const double delta = delta_t > 0.0 ? delta_t : DefaultDeltaT(std::max(n, 1));
  return std::max(1, static_cast<int>(std::ceil(1.0 / delta - 1e-9)));
}

MultilinearOracle::MultilinearOracle(const SetFunctionOracle& g,
                                     const SolverConfig& cfg)
    : g_(g) {
  if (g.n() <= cfg.exact_gradient_cap && g.n() <= kMaxTableSize) {
    table_ = ValueTable::Build(g);
  } else if (cfg.gradient_samples > 0) {
    samples_ = cfg.gradient_samples;
  } else {
    samples_ = EstimatorConfig::GradientHoeffding(
                   cfg.epsilon, cfg.gradient_fail_probability, g.n(), 0)
                   .sample_count;
  }
}

std::vector<double> MultilinearOracle::Gradient(const FractionalPoint& x,
                                                uint64_t stream) const {
  if (table_) return MultilinearGradExact(*table_, x);
  return MultilinearGradSample(g_, x, EstimatorConfig{samples_, stream});
}

double MultilinearOracle::Value(const FractionalPoint& x,
                                uint64_t stream) const {
  if (table_) return MultilinearExact(*table_, x);
  return MultilinearSample(g_, x, EstimatorConfig{samples_, stream});
}

double TrajectoryWitness::ClosureLowerBound() const {
  double total = 0.0;
  for (const StepLog& s : steps) total += delta_t * s.clo;
  return total;
}

ConvexCombination ReduceSupport(const ConvexCombination& comb,
                                const MNatConcaveFn& h, int n) {
  ConvexCombination out = comb.Normalized();
  while (static_cast<int>(out.terms.size()) > n + 1) {
    std::vector<double> mu = NullCombination(out.terms, n);
    double dh = 0.0;
    for (size_t t = 0; t < mu.size(); ++t) dh += mu[t] * h.Value(out.terms[t].set);
    if (dh < 0.0) {
      for (double& v : mu) v = -v;
    }
    // Largest step keeping every weight nonnegative.
    double step = std::numeric_limits<double>::infinity();
    size_t hit = 0;
    for (size_t t = 0; t < mu.size(); ++t) {
      if (mu[t] < -1e-12) {
        const double s = out.terms[t].weight / -mu[t];
        if (s < step) {
          step = s;
          hit = t;
        }
      }
    }
    if (!std::isfinite(step)) {
      throw IntegrityError("ReduceSupport: null direction has no negative entry");
    }
    for (size_t t = 0; t < mu.size(); ++t) {
      out.terms[t].weight += step * mu[t];
    }
    out.terms[hit].weight = 0.0;
    std::erase_if(out.terms, [](const ConvexCombination::Term& term) {
      return term.weight <= 1e-15;
    });
  }
  return out;
}

std::optional<TrajectoryWitness> ContinuousGreedyRun(
    const MultilinearOracle& g, const MNatConcaveFn& h, int k, double alpha,
    double beta, const SolverConfig& cfg, double m, uint64_t seed) {
  const int n = h.n();
  if (g.n() != n) throw PreconditionError("g and h ground sets differ");
  if (k < 0 || k > n) throw PreconditionError("cardinality outside [0, n]");
  const int steps = cfg.Steps(n);
  const double delta = 1.0 / steps;
  const double scale = std::max(1.0, m);
  const double slack = g.exact() ? 1e-9 * scale : cfg.epsilon * m;
  const size_t support_cap = static_cast<size_t>(cfg.compaction_factor) * n;

  std::vector<double> x(n, 0.0);
  ConvexCombination comb;
  comb.cardinality = k;
  std::vector<StepLog> log;
  log.reserve(steps);
  double alpha_attained = std::numeric_limits<double>::infinity();
  for (int t = 0; t < steps; ++t) {
    const FractionalPoint point(x);
    const std::vector<double> grad = g.Gradient(point, DeriveSeed(seed, 2 * t));
    const double g_value = g.Value(point, DeriveSeed(seed, 2 * t + 1));
    const auto dir = ParetoDirection(grad, h, k, alpha - g_value - slack, beta,
                                     1e-9 * scale);
    if (!dir) return std::nullopt;
    log.push_back({dir->lin, dir->clo, g_value});
    alpha_attained = std::min(alpha_attained, dir->lin + g_value);
    for (int i = 0; i < n; ++i) x[i] += delta * dir->v[i];
    for (const auto& term : dir->witness.terms) {
      comb.terms.push_back({delta * term.weight, term.set});
    }
    comb = comb.Normalized();
    if (comb.terms.size() > support_cap) comb = ReduceSupport(comb, h, n);
  }
  if (steps == 0) alpha_attained = 0.0;
  return TrajectoryWitness{FractionalPoint(x), std::move(comb), std::move(log),
                           delta, alpha_attained};
}

}  // namespace hcurv
