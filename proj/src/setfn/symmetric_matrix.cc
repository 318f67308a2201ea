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

#include "hcurv/setfn/symmetric_matrix.h"

#include <cmath>
#include <string>

#include "hcurv/setfn/errors.h"

namespace hcurv {

SymmetricMatrix SymmetricMatrix::FromRows(
    const std::vector<std::vector<double>>& rows, double tol) {
  const int n = static_cast<int>(rows.size());
  SymmetricMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw PreconditionError("matrix row " + std::to_string(i) + " has " +
                              std::to_string(rows[i].size()) +
                              " entries, expected " + std::to_string(n));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (std::abs(rows[i][j] - rows[j][i]) > tol) {
        throw PreconditionError("matrix is not symmetric at (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ")");
      }
      m.Set(i, j, rows[i][j]);
    }
  }
  return m;
}

std::vector<std::vector<double>> SymmetricMatrix::Rows() const {
  std::vector<std::vector<double>> rows(n_, std::vector<double>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) rows[i][j] = (*this)(i, j);
  }
  return rows;
}

}  // namespace hcurv
