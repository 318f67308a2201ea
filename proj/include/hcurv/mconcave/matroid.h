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

#ifndef HCURV_MCONCAVE_MATROID_H_
#define HCURV_MCONCAVE_MATROID_H_

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hcurv/setfn/subset.h"

namespace hcurv {

// A matroid on {0..n-1} given by its rank function. Uniform and partition
// matroids are built in; anything else can be supplied as a rank oracle.
class Matroid {
 public:
  enum class Kind { kUniform, kPartition, kCustom };

  static Matroid Uniform(int n, int rank);

  // Blocks must be pairwise disjoint. Elements outside every block are loops.
  static Matroid Partition(int n, std::vector<Subset> blocks,
                           std::vector<int> capacities);

  // The oracle must be a matroid rank function; this is not verified.
  static Matroid FromRankOracle(int n, std::function<int(Subset)> rank,
                                std::string name);

  int n() const { return n_; }
  Kind kind() const { return kind_; }
  std::string_view KindName() const;

  int Rank(Subset x) const;
  bool IsIndependent(Subset x) const { return Rank(x) == x.Size(); }
  int FullRank() const { return Rank(Subset::Full(n_)); }

  // Only meaningful for the matching kind.
  int uniform_rank() const { return uniform_rank_; }
  const std::vector<Subset>& blocks() const { return blocks_; }
  const std::vector<int>& capacities() const { return capacities_; }

 private:
  Matroid(int n, Kind kind) : n_(n), kind_(kind) {}

  int n_;
  Kind kind_;
  int uniform_rank_ = 0;
  std::vector<Subset> blocks_;
  std::vector<int> capacities_;
  std::shared_ptr<const std::function<int(Subset)>> custom_rank_;
  std::string custom_name_;
};

// r(X) = max{|I| : I subset of X, I independent}.
int MatroidRank(const Matroid& m, Subset x);

// max{w(I) : I subset of X, I independent}, by the matroid greedy algorithm
// over X in descending weight order (ties by index). Requires w >= 0.
double MaxWeightIndependent(const Matroid& m, std::span<const double> weights,
                            Subset x);

}  // namespace hcurv

#endif  // HCURV_MCONCAVE_MATROID_H_
