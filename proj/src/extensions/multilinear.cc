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

#include "hcurv/extensions/multilinear.h"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include "hcurv/setfn/errors.h"
#include "hcurv/setfn/random.h"

namespace hcurv {
namespace {

void CheckSizes(int fn, int xn) {
  if (fn != xn) {
    throw PreconditionError("multilinear: point has " + std::to_string(xn) +
                            " coordinates, function has n = " +
                            std::to_string(fn));
  }
}

Subset SampleSet(Rng& rng, const FractionalPoint& x) {
  Subset s;
  for (int i = 0; i < x.n(); ++i) {
    if (rng.Uniform() < x[i]) s = s.With(i);
  }
  return s;
}

// Folds coordinates of the table one at a time, highest first:
//   T'[S] = (1 - x_j) T[S] + x_j T[S + j].
double FoldAll(std::vector<double> table, std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  for (int j = n - 1; j >= 0; --j) {
    const size_t half = size_t{1} << j;
    for (size_t s = 0; s < half; ++s) {
      table[s] = (1.0 - x[j]) * table[s] + x[j] * table[s + half];
    }
  }
  return table[0];
}

}  // namespace

EstimatorConfig EstimatorConfig::Hoeffding(double epsilon, double delta,
                                           double range_over_m,
                                           uint64_t seed) {
  if (!(epsilon > 0.0) || !(delta > 0.0 && delta < 1.0) ||
      !(range_over_m >= 0.0)) {
    throw PreconditionError(
        "Hoeffding: need epsilon > 0, 0 < delta < 1, range >= 0");
  }
  const double count = std::ceil(range_over_m * range_over_m *
                                 std::log(2.0 / delta) /
                                 (2.0 * epsilon * epsilon));
  EstimatorConfig cfg;
  cfg.sample_count = std::max<int64_t>(1, static_cast<int64_t>(count));
  cfg.seed = seed;
  return cfg;
}

EstimatorConfig EstimatorConfig::GradientHoeffding(double epsilon,
                                                   double delta, int n,
                                                   uint64_t seed) {
  GroundSet ground(n);
  return Hoeffding(epsilon / n, delta / n, 1.0, seed);
}

std::vector<double> InclusionProbabilities(const FractionalPoint& x) {
  const int n = x.n();
  if (n > kMaxTableSize) {
    throw CapExceededError("InclusionProbabilities", n, kMaxTableSize);
  }
  std::vector<double> p(size_t{1} << n, 0.0);
  p[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    const size_t half = size_t{1} << i;
    for (size_t s = 0; s < half; ++s) {
      p[s + half] = p[s] * x[i];
      p[s] *= 1.0 - x[i];
    }
  }
  return p;
}

double MultilinearExact(const ValueTable& f, const FractionalPoint& x) {
  CheckSizes(f.n(), x.n());
  const auto values = f.values();
  return FoldAll(std::vector<double>(values.begin(), values.end()),
                 x.values());
}

double MultilinearExact(const SetFunctionOracle& f, const FractionalPoint& x,
                        int cap) {
  if (f.n() > cap) throw CapExceededError("MultilinearExact", f.n(), cap);
  CheckSizes(f.n(), x.n());
  return MultilinearExact(ValueTable::Build(f), x);
}

double MultilinearSample(const SetFunctionOracle& f, const FractionalPoint& x,
                         const EstimatorConfig& cfg) {
  CheckSizes(f.n(), x.n());
  if (cfg.sample_count < 1) {
    throw PreconditionError("MultilinearSample: sample_count must be >= 1");
  }
  Rng rng(cfg.seed);
  double total = 0.0;
  for (int64_t s = 0; s < cfg.sample_count; ++s) {
    total += f.Value(SampleSet(rng, x));
  }
  return total / static_cast<double>(cfg.sample_count);
}

std::vector<double> MultilinearGradExact(const ValueTable& f,
                                         const FractionalPoint& x) {
  const int n = f.n();
  CheckSizes(n, x.n());
  const auto values = f.values();
  std::vector<double> grad(n);
  std::vector<double> diff(size_t{1} << (n - 1));
  std::vector<double> rest(n - 1);
  for (int i = 0; i < n; ++i) {
    // Table of f(S + i) - f(S) over S in E - i, reindexed to n - 1 bits.
    const uint64_t low = (uint64_t{1} << i) - 1;
    for (uint64_t s = 0; s < diff.size(); ++s) {
      const uint64_t mask = (s & low) | ((s & ~low) << 1);
      diff[s] = values[mask | (uint64_t{1} << i)] - values[mask];
    }
    for (int j = 0, t = 0; j < n; ++j) {
      if (j != i) rest[t++] = x[j];
    }
    grad[i] = FoldAll(diff, rest);
  }
  return grad;
}

std::vector<double> MultilinearGradSample(const SetFunctionOracle& f,
                                          const FractionalPoint& x,
                                          const EstimatorConfig& cfg) {
  const int n = f.n();
  CheckSizes(n, x.n());
  if (cfg.sample_count < 1) {
    throw PreconditionError("MultilinearGradSample: sample_count must be >= 1");
  }
  std::vector<double> grad(n);
  for (int i = 0; i < n; ++i) {
    Rng rng(DeriveSeed(cfg.seed, static_cast<uint64_t>(i)));
    double total = 0.0;
    for (int64_t s = 0; s < cfg.sample_count; ++s) {
      const Subset r = SampleSet(rng, x).Without(i);
      total += f.Value(r.With(i)) - f.Value(r);
    }
    grad[i] = total / static_cast<double>(cfg.sample_count);
  }
  return grad;
}

std::vector<double> MultilinearGrad(const SetFunctionOracle& f,
                                    const FractionalPoint& x,
                                    const EstimatorConfig& cfg,
                                    int exact_cap) {
  if (f.n() <= exact_cap) {
    return MultilinearGradExact(ValueTable::Build(f), x);
  }
  return MultilinearGradSample(f, x, cfg);
}

}  // namespace hcurv
