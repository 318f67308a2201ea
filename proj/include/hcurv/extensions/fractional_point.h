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

#ifndef HCURV_EXTENSIONS_FRACTIONAL_POINT_H_
#define HCURV_EXTENSIONS_FRACTIONAL_POINT_H_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hcurv/setfn/subset.h"

namespace hcurv {

// A point of [0,1]^n.
class FractionalPoint {
 public:
  // Entries within 1e-9 outside [0, 1] are clamped; anything further out
  // throws PreconditionError.
  explicit FractionalPoint(std::vector<double> x);

  static FractionalPoint Zero(int n);
  static FractionalPoint Indicator(int n, Subset s);

  int n() const { return static_cast<int>(x_.size()); }
  double operator[](int i) const { return x_[i]; }
  std::span<const double> values() const { return x_; }
  double Sum() const;

  // Coordinates equal to 0 and to 1 within tol.
  Subset Zeros(double tol = 1e-9) const;
  Subset Ones(double tol = 1e-9) const;

  // A copy with coordinate i replaced.
  FractionalPoint With(int i, double value) const;

 private:
  std::vector<double> x_;
};

// sum_t weight_t * 1_{set_t} with weights summing to one and every set of
// the same cardinality.
struct ConvexCombination {
  struct Term {
    double weight = 0.0;
    Subset set;
  };

  int cardinality = 0;
  std::vector<Term> terms;

  static ConvexCombination Single(Subset s);

  double TotalWeight() const;
  // sum_t weight_t * 1_{set_t}.
  std::vector<double> Point(int n) const;
  // sum_t weight_t * f(set_t).
  double Evaluate(const std::function<double(Subset)>& f) const;

  // Merges identical sets, drops weights <= tol and sorts terms in LexLess
  // order of their sets.
  ConvexCombination Normalized(double tol = 0.0) const;

  // Empty when valid; otherwise the first problem found. Checks positive
  // weights, unit total, equal cardinalities and, when x is given, that the
  // combination reconstructs x within tol.
  std::string Validate(const FractionalPoint* x = nullptr,
                       double tol = 1e-7) const;
};

}  // namespace hcurv

#endif  // HCURV_EXTENSIONS_FRACTIONAL_POINT_H_
