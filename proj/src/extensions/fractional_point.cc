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

#include "hcurv/extensions/fractional_point.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "hcurv/setfn/errors.h"

namespace hcurv {
namespace {

constexpr double kClampSlack = 1e-9;

}  // namespace

FractionalPoint::FractionalPoint(std::vector<double> x) : x_(std::move(x)) {
  GroundSet ground(static_cast<int>(x_.size()));
  for (size_t i = 0; i < x_.size(); ++i) {
    double& v = x_[i];
    if (!std::isfinite(v) || v < -kClampSlack || v > 1.0 + kClampSlack) {
      std::ostringstream msg;
      msg << "fractional point: coordinate " << i << " = " << v
          << " outside [0, 1]";
      throw PreconditionError(msg.str());
    }
    v = std::clamp(v, 0.0, 1.0);
  }
}

FractionalPoint FractionalPoint::Zero(int n) {
  return FractionalPoint(std::vector<double>(n, 0.0));
}

FractionalPoint FractionalPoint::Indicator(int n, Subset s) {
  std::vector<double> x(n, 0.0);
  s.ForEach([&](int i) { x[i] = 1.0; });
  return FractionalPoint(std::move(x));
}

double FractionalPoint::Sum() const {
  return std::accumulate(x_.begin(), x_.end(), 0.0);
}

Subset FractionalPoint::Zeros(double tol) const {
  Subset s;
  for (int i = 0; i < n(); ++i) {
    if (x_[i] <= tol) s = s.With(i);
  }
  return s;
}

Subset FractionalPoint::Ones(double tol) const {
  Subset s;
  for (int i = 0; i < n(); ++i) {
    if (x_[i] >= 1.0 - tol) s = s.With(i);
  }
  return s;
}

FractionalPoint FractionalPoint::With(int i, double value) const {
  std::vector<double> copy = x_;
  copy.at(i) = value;
  return FractionalPoint(std::move(copy));
}

ConvexCombination ConvexCombination::Single(Subset s) {
  return ConvexCombination{s.Size(), {{1.0, s}}};
}

double ConvexCombination::TotalWeight() const {
  double total = 0.0;
  for (const Term& t : terms) total += t.weight;
  return total;
}

std::vector<double> ConvexCombination::Point(int n) const {
  std::vector<double> x(n, 0.0);
  for (const Term& t : terms) {
    t.set.ForEach([&](int i) {
      if (i < n) x[i] += t.weight;
    });
  }
  return x;
}

double ConvexCombination::Evaluate(
    const std::function<double(Subset)>& f) const {
  double total = 0.0;
  for (const Term& t : terms) total += t.weight * f(t.set);
  return total;
}

ConvexCombination ConvexCombination::Normalized(double tol) const {
  std::map<Subset, double, LexOrder> merged;
  for (const Term& t : terms) merged[t.set] += t.weight;
  ConvexCombination out;
  out.cardinality = cardinality;
  for (const auto& [set, weight] : merged) {
    if (weight > tol) out.terms.push_back({weight, set});
  }
  return out;
}

std::string ConvexCombination::Validate(const FractionalPoint* x,
                                        double tol) const {
  if (terms.empty()) return "convex combination has no terms";
  for (const Term& t : terms) {
    if (!(t.weight > 0.0)) return "nonpositive weight on " + ToString(t.set);
    if (t.set.Size() != cardinality) {
      return "set " + ToString(t.set) + " does not have cardinality " +
             std::to_string(cardinality);
    }
  }
  if (std::abs(TotalWeight() - 1.0) > tol) {
    std::ostringstream msg;
    msg << "weights sum to " << TotalWeight();
    return msg.str();
  }
  if (x != nullptr) {
    const std::vector<double> point = Point(x->n());
    for (const Term& t : terms) {
      if (!t.set.IsSubsetOf(Subset::Full(x->n()))) {
        return "set " + ToString(t.set) + " leaves the ground set";
      }
    }
    for (int i = 0; i < x->n(); ++i) {
      if (std::abs(point[i] - (*x)[i]) > tol) {
        std::ostringstream msg;
        msg << "coordinate " << i << " reconstructs to " << point[i]
            << " instead of " << (*x)[i];
        return msg.str();
      }
    }
  }
  return "";
}

}  // namespace hcurv
