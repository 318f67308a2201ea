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

#ifndef HCURV_SETFN_SYMMETRIC_MATRIX_H_
#define HCURV_SETFN_SYMMETRIC_MATRIX_H_

#include <vector>

namespace hcurv {

// Dense symmetric n x n matrix, stored row-major. Set() writes both halves.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int n) : n_(n), data_(static_cast<size_t>(n) * n) {}

  // Throws PreconditionError unless rows is square and symmetric within tol.
  static SymmetricMatrix FromRows(const std::vector<std::vector<double>>& rows,
                                  double tol = 1e-9);

  int n() const { return n_; }
  double operator()(int i, int j) const { return data_[Index(i, j)]; }
  void Set(int i, int j, double value) {
    data_[Index(i, j)] = value;
    data_[Index(j, i)] = value;
  }

  std::vector<std::vector<double>> Rows() const;

  friend bool operator==(const SymmetricMatrix&,
                         const SymmetricMatrix&) = default;

 private:
  size_t Index(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }

  int n_ = 0;
  std::vector<double> data_;
};

}  // namespace hcurv

#endif  // HCURV_SETFN_SYMMETRIC_MATRIX_H_
