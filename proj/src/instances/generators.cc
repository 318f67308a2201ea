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

#include "hcurv/instances/generators.h"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hcurv/setfn/errors.h"
#include "hcurv/setfn/random.h"

namespace hcurv {
namespace {

void Shuffle(std::vector<int>& v, Rng& rng) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
    std::swap(v[i], v[rng.UniformInt(0, i)]);
  }
}

// Splits blocks of size >= 4 in two (both parts >= 2): the largest one
// always, the others with probability 1/2.
std::vector<std::vector<int>> Refine(
    const std::vector<std::vector<int>>& blocks, Rng& rng) {
  size_t largest = 0;
  for (size_t b = 1; b < blocks.size(); ++b) {
    if (blocks[b].size() > blocks[largest].size()) largest = b;
  }
  std::vector<std::vector<int>> out;
  for (size_t index = 0; index < blocks.size(); ++index) {
    std::vector<int> b = blocks[index];
    const int size = static_cast<int>(b.size());
    if (size < 4 || (index != largest && !rng.Bernoulli(0.5))) {
      out.push_back(std::move(b));
      continue;
    }
    Shuffle(b, rng);
    const int cut = static_cast<int>(rng.UniformInt(2, size - 2));
    std::vector<int> left(b.begin(), b.begin() + cut);
    std::vector<int> right(b.begin() + cut, b.end());
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    out.push_back(std::move(left));
    out.push_back(std::move(right));
  }
  return out;
}

std::vector<double> IntegerWeights(int n, int lo, int hi, Rng& rng) {
  std::vector<double> w(n);
  for (double& v : w) v = static_cast<double>(rng.UniformInt(lo, hi));
  return w;
}

}  // namespace

CoverageInstance GenerateCoverage(int n, int items, double density,
                                  uint64_t seed) {
  GroundSet ground(n);
  if (n < 1 || items < 0 || !(density >= 0.0 && density <= 1.0)) {
    throw PreconditionError(
        "generate coverage: need n >= 1, items >= 0, density in [0, 1]");
  }
  Rng rng(seed);
  CoverageInstance inst{n, {}};
  for (int v = 0; v < items; ++v) {
    Subset s;
    for (int e = 0; e < n; ++e) {
      if (rng.Bernoulli(density)) s = s.With(e);
    }
    if (s.Empty()) s = s.With(static_cast<int>(rng.UniformInt(0, n - 1)));
    inst.gamma.push_back(s);
  }
  return inst;
}

FacilityLocationInstance GenerateFacility(int n, int customers, int lo,
                                          int hi, uint64_t seed) {
  GroundSet ground(n);
  if (n < 1 || customers < 1 || lo < 0 || hi < lo) {
    throw PreconditionError(
        "generate facility: need n >= 1, customers >= 1, 0 <= lo <= hi");
  }
  Rng rng(seed);
  FacilityLocationInstance inst;
  for (int i = 0; i < customers; ++i) {
    inst.w.push_back(IntegerWeights(n, lo, hi, rng));
  }
  return inst;
}

WeightedRankSumInstance GenerateWrs(const WrsParams& params, uint64_t seed) {
  const int n = params.n;
  GroundSet ground(n);
  if (n < 2 || params.partition_matroids < 0 || params.weight_lo < 0 ||
      params.weight_hi < params.weight_lo ||
      (params.partition_matroids == 0 && !params.with_uniform)) {
    throw PreconditionError(
        "generate wrs: need n >= 2, at least one matroid, 0 <= lo <= hi");
  }
  Rng rng(seed);
  WeightedRankSumInstance inst;
  inst.n = n;

  // The coarsest partition: chunks of a shuffled ground set, each >= 2.
  std::vector<int> order(n);
  for (int e = 0; e < n; ++e) order[e] = e;
  Shuffle(order, rng);
  const int parts = static_cast<int>(rng.UniformInt(1, std::max(1, n / 4)));
  std::vector<std::vector<int>> blocks;
  for (int p = 0; p < parts; ++p) {
    const int begin = p * n / parts;
    const int end = (p + 1) * n / parts;
    std::vector<int> b(order.begin() + begin, order.begin() + end);
    std::sort(b.begin(), b.end());
    blocks.push_back(std::move(b));
  }

  for (int m = 0; m < params.partition_matroids; ++m) {
    if (m > 0) blocks = Refine(blocks, rng);
    std::vector<Subset> sets;
    std::vector<int> caps;
    for (const auto& b : blocks) {
      sets.push_back(Subset::Of(b));
      caps.push_back(static_cast<int>(
          rng.UniformInt(1, static_cast<int64_t>(b.size()) - 1)));
    }
    inst.matroids.push_back(Matroid::Partition(n, sets, caps));
    inst.weights.push_back(
        IntegerWeights(n, params.weight_lo, params.weight_hi, rng));
  }
  if (params.with_uniform) {
    inst.matroids.push_back(
        Matroid::Uniform(n, static_cast<int>(rng.UniformInt(1, n - 1))));
    inst.weights.push_back(
        IntegerWeights(n, params.weight_lo, params.weight_hi, rng));
  }
  return inst;
}

}  // namespace hcurv
