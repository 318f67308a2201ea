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
// Box-constrained L-infinity fitting of a nonpositive ultrametric matrix,
// and the laminar form of the resulting quadratic.
//
// "Ultrametric" here means A_ij <= max(A_ik, A_jk) for every triple of
// distinct indices, i.e. the largest value of each triple is attained at
// least twice. Only off-diagonal entries matter.
//

#ifndef HCURV_DECOMPOSE_ULTRAMETRIC_H_
#define HCURV_DECOMPOSE_ULTRAMETRIC_H_

#include <array>
#include <optional>
#include <vector>

#include "hcurv/setfn/config.h"
#include "hcurv/setfn/subset.h"
#include "hcurv/setfn/symmetric_matrix.h"

namespace hcurv {

// First triple (i, j, k) in index order with A_ij > max(A_ik, A_jk) + tol.
std::optional<std::array<int, 3>> FindUltrametricViolation(
    const SymmetricMatrix& a, double tol = kTolerance);

// The largest ultrametric matrix below u (off-diagonal): entry ij is the
// minimum over paths from i to j of the largest entry on the path. Diagonal
// is copied.
SymmetricMatrix SubdominantUltrametric(const SymmetricMatrix& u);

struct UltrametricFit {
  SymmetricMatrix a;  // zero diagonal
  double error = 0.0;  // max_{i != j} |A_ij - H_ij|
};

// Minimizes max |A_ij - H_ij| over ultrametric A with H <= A <= 0. The
// radius is found by binary search over the finite candidate set
// {0, |H_ij|, |H_ij - H_kl|}; feasibility of a radius e is checked by
// comparing the subdominant ultrametric of min(0, H + e) against H.
//
// Among optimal A the canonical one is returned: pairs are visited in
// reverse row-major order ((n-2, n-1) first) and each is set to the smallest
// value that keeps the remaining box problem feasible.
UltrametricFit FitUltrametric(const SymmetricMatrix& h);

// A = sum_L lambda_L 1_L 1_L^T + Diag(d).
struct LaminarQuadraticRep {
  std::vector<Subset> sets;
  std::vector<double> lambda;  // each <= 0
  std::vector<double> d;

  SymmetricMatrix Reconstruct() const;
};

// Builds the single-linkage merge tree of the off-diagonal values (most
// negative merges deepest); every internal node with a nonzero level
// difference becomes a laminar set. Throws PreconditionError naming the
// failing triple if A is not ultrametric or has a positive off-diagonal
// entry.
LaminarQuadraticRep LaminarFromUltrametric(const SymmetricMatrix& a,
                                           double tol = kTolerance);

}  // namespace hcurv

#endif  // HCURV_DECOMPOSE_ULTRAMETRIC_H_
