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

#include "hcurv/setfn/brute_force.h"

#include <limits>
#include <sstream>
#include <string>

#include "hcurv/setfn/errors.h"

namespace hcurv {
namespace {

void CheckCap(const char* what, int n, int cap) {
  if (n > cap) throw CapExceededError(what, n, cap);
}

void CheckCardinality(const char* what, int n, int k) {
  if (k < 0 || k > n) {
    throw PreconditionError(std::string(what) + ": cardinality " +
                            std::to_string(k) + " outside [0, " +
                            std::to_string(n) + "]");
  }
}

// Candidates arrive in LexLess order, so only a strict improvement (beyond
// the tolerance) replaces the incumbent.
struct Incumbent {
  SubsetValue best{Subset(), -std::numeric_limits<double>::infinity()};

  void Offer(Subset s, double value) {
    if (value > best.value + kTolerance) best = {s, value};
  }
};

}  // namespace

SubsetValue BruteForceMax(const SetFunctionOracle& f, int k, int cap) {
  CheckCap("BruteForceMax", f.n(), cap);
  CheckCardinality("BruteForceMax", f.n(), k);
  Incumbent incumbent;
  ForEachSubsetLex(f.n(), k, [&](Subset s) {
    incumbent.Offer(s, f.Value(s));
    return true;
  });
  return incumbent.best;
}

SubsetValue BruteForceMaxExact(const SetFunctionOracle& f, int k, int cap) {
  CheckCap("BruteForceMaxExact", f.n(), cap);
  CheckCardinality("BruteForceMaxExact", f.n(), k);
  Incumbent incumbent;
  ForEachSubsetOfSizeLex(f.n(), k, [&](Subset s) {
    incumbent.Offer(s, f.Value(s));
    return true;
  });
  return incumbent.best;
}

SubsetValue BruteForceMin(const SetFunctionOracle& f, int cap) {
  CheckCap("BruteForceMin", f.n(), cap);
  SubsetValue best{Subset(), std::numeric_limits<double>::infinity()};
  ForEachSubsetLex(f.n(), f.n(), [&](Subset s) {
    const double v = f.Value(s);
    if (v < best.value - kTolerance) best = {s, v};
    return true;
  });
  return best;
}

std::string MonotoneSubmodularWitness::ToString() const {
  std::ostringstream out;
  if (kind == Kind::kMonotonicity) {
    out << "monotonicity violated: f(" << i << " | " << hcurv::ToString(x)
        << ") = " << value;
  } else {
    out << "submodularity violated: Hess_f(" << hcurv::ToString(x) << ")_{"
        << i << "," << j << "} = " << value;
  }
  return out.str();
}

MonotoneSubmodularCheck VerifyMonotoneSubmodular(const SetFunctionOracle& f,
                                                 int cap, bool check_monotone,
                                                 double tol) {
  CheckCap("VerifyMonotoneSubmodular", f.n(), cap);
  const int n = f.n();
  const ValueTable table = ValueTable::Build(f);
  MonotoneSubmodularCheck result;
  ForEachSubsetLex(n, n, [&](Subset x) {
    const double fx = table[x];
    if (check_monotone) {
      for (int i = 0; i < n; ++i) {
        if (x.Contains(i)) continue;
        const double gain = table[x.With(i)] - fx;
        if (gain < -tol) {
          result.ok = false;
          result.witness = MonotoneSubmodularWitness{
              MonotoneSubmodularWitness::Kind::kMonotonicity, x, i, -1, gain};
          return false;
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      if (x.Contains(i)) continue;
      for (int j = i + 1; j < n; ++j) {
        if (x.Contains(j)) continue;
        const double hess = table[x.With(i).With(j)] + fx - table[x.With(i)] -
                            table[x.With(j)];
        if (hess > tol) {
          result.ok = false;
          result.witness = MonotoneSubmodularWitness{
              MonotoneSubmodularWitness::Kind::kSubmodularity, x, i, j, hess};
          return false;
        }
      }
    }
    return true;
  });
  return result;
}

}  // namespace hcurv
