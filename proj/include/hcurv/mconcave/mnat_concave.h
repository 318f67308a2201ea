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
// The built-in M-natural concave function classes. Every instance is
// immutable and validated at construction, so the exchange property holds by
// construction (and is re-checked exhaustively in tests).
//

#ifndef HCURV_MCONCAVE_MNAT_CONCAVE_H_
#define HCURV_MCONCAVE_MNAT_CONCAVE_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hcurv/mconcave/matroid.h"
#include "hcurv/setfn/config.h"
#include "hcurv/setfn/set_function.h"
#include "hcurv/setfn/subset.h"
#include "hcurv/setfn/symmetric_matrix.h"

namespace hcurv {

// Sets that are pairwise nested or disjoint, each with a concave table
// phi_L(0..|L|).
struct LaminarFamily {
  std::vector<Subset> sets;
  std::vector<std::vector<double>> phi;
};

// Returns an empty string when the family is laminar and every table is
// concave with the right length, otherwise a description of the first
// problem found.
std::string ValidateLaminarFamily(int n, const LaminarFamily& family,
                                  double tol = kTolerance);

// h(X) = sum_L phi_L(|X & L|), with each table shifted so phi_L(0) = 0.
struct LaminarConcave {
  LaminarFamily family;
};

// h(X) = max{w(I) : I subset of X, I independent}.
struct WeightedMatroidRank {
  Matroid matroid;
  std::vector<double> weights;
  std::vector<int> order;  // elements by descending weight, ties by index
};

// h(X) = 1/2 1_X^T A 1_X.
struct QuadraticMNat {
  SymmetricMatrix a;
};

// h(X) = ell(X) + c0 [X != empty].
struct ModularPlusIndicator {
  std::vector<double> ell;
  double c0 = 0.0;
};

class MNatConcaveFn {
 public:
  using Variant = std::variant<LaminarConcave, WeightedMatroidRank,
                               QuadraticMNat, ModularPlusIndicator>;

  static MNatConcaveFn Laminar(int n, LaminarFamily family);
  static MNatConcaveFn WeightedRank(Matroid matroid,
                                    std::vector<double> weights);
  // Rejects positive off-diagonal entries and triples whose maximum is
  // attained only once.
  static MNatConcaveFn Quadratic(SymmetricMatrix a, double tol = kTolerance);
  static MNatConcaveFn ModularIndicator(std::vector<double> ell, double c0);

  // Conveniences built on the variants above.
  static MNatConcaveFn Modular(std::vector<double> weights);
  static MNatConcaveFn Zero(int n);
  // h(X) = phi(|X|) with phi given on 0..n.
  static MNatConcaveFn ConcaveOfCardinality(int n, std::vector<double> phi);

  int n() const { return n_; }
  const Variant& variant() const { return *variant_; }
  std::string_view KindName() const;

  // One counted evaluation.
  double Value(Subset x) const;
  double operator()(Subset x) const { return Value(x); }

  int64_t calls() const { return calls_->load(); }
  void ResetCalls() const { calls_->store(0); }

  // A value oracle over the same function with its own counter.
  SetFunctionOracle AsOracle(std::string name = "h") const;

  // The same function scaled by factor >= 0.
  MNatConcaveFn Scaled(double factor) const;

 private:
  MNatConcaveFn(int n, Variant variant);

  double Evaluate(Subset x) const;

  int n_;
  std::shared_ptr<const Variant> variant_;
  std::shared_ptr<std::atomic<int64_t>> calls_;
};

}  // namespace hcurv

#endif  // HCURV_MCONCAVE_MNAT_CONCAVE_H_
