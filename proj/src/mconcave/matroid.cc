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

#include "hcurv/mconcave/matroid.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "hcurv/setfn/errors.h"

namespace hcurv {

Matroid Matroid::Uniform(int n, int rank) {
  GroundSet ground(n);
  if (rank < 0 || rank > n) {
    throw PreconditionError("uniform matroid rank " + std::to_string(rank) +
                            " outside [0, " + std::to_string(n) + "]");
  }
  Matroid m(ground.size(), Kind::kUniform);
  m.uniform_rank_ = rank;
  return m;
}

Matroid Matroid::Partition(int n, std::vector<Subset> blocks,
                           std::vector<int> capacities) {
  GroundSet ground(n);
  if (blocks.size() != capacities.size()) {
    throw PreconditionError("partition matroid: " +
                            std::to_string(blocks.size()) + " blocks but " +
                            std::to_string(capacities.size()) + " capacities");
  }
  Subset seen;
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (!ground.Contains(blocks[b])) {
      throw PreconditionError("partition matroid: block " + std::to_string(b) +
                              " leaves the ground set");
    }
    if (!(seen & blocks[b]).Empty()) {
      throw PreconditionError("partition matroid: block " + std::to_string(b) +
                              " overlaps an earlier block");
    }
    if (capacities[b] < 0) {
      throw PreconditionError("partition matroid: negative capacity");
    }
    seen = seen | blocks[b];
  }
  Matroid m(ground.size(), Kind::kPartition);
  m.blocks_ = std::move(blocks);
  m.capacities_ = std::move(capacities);
  return m;
}

Matroid Matroid::FromRankOracle(int n, std::function<int(Subset)> rank,
                                std::string name) {
  GroundSet ground(n);
  if (!rank) throw PreconditionError("custom matroid needs a rank oracle");
  Matroid m(ground.size(), Kind::kCustom);
  m.custom_rank_ =
      std::make_shared<const std::function<int(Subset)>>(std::move(rank));
  m.custom_name_ = std::move(name);
  return m;
}

std::string_view Matroid::KindName() const {
  switch (kind_) {
    case Kind::kUniform:
      return "uniform";
    case Kind::kPartition:
      return "partition";
    case Kind::kCustom:
      return custom_name_;
  }
  return "";
}

int Matroid::Rank(Subset x) const {
  switch (kind_) {
    case Kind::kUniform:
      return std::min(x.Size(), uniform_rank_);
    case Kind::kPartition: {
      int rank = 0;
      for (size_t b = 0; b < blocks_.size(); ++b) {
        rank += std::min((x & blocks_[b]).Size(), capacities_[b]);
      }
      return rank;
    }
    case Kind::kCustom:
      return (*custom_rank_)(x);
  }
  return 0;
}

int MatroidRank(const Matroid& m, Subset x) { return m.Rank(x); }

double MaxWeightIndependent(const Matroid& m, std::span<const double> weights,
                            Subset x) {
  if (static_cast<int>(weights.size()) != m.n()) {
    throw PreconditionError("MaxWeightIndependent: weight vector size mismatch");
  }
  std::vector<int> order = x.Elements();
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[a] > weights[b]; });
  Subset independent;
  double total = 0.0;
  for (int e : order) {
    if (weights[e] < 0.0) {
      throw PreconditionError("MaxWeightIndependent: negative weight");
    }
    const Subset candidate = independent.With(e);
    if (m.IsIndependent(candidate)) {
      independent = candidate;
      total += weights[e];
    }
  }
  return total;
}

}  // namespace hcurv
