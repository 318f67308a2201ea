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

#ifndef HCURV_MCONCAVE_EXCHANGE_H_
#define HCURV_MCONCAVE_EXCHANGE_H_

#include <optional>
#include <string>

#include "hcurv/mconcave/mnat_concave.h"
#include "hcurv/setfn/config.h"
#include "hcurv/setfn/set_function.h"

namespace hcurv {

struct ExchangeWitness {
  Subset x;
  Subset y;
  int i = -1;

  std::string ToString() const;
};

struct ExchangeCheck {
  bool ok = true;
  std::optional<ExchangeWitness> witness;
};

// Checks, for all X, Y and i in X - Y, that
//   h(X) + h(Y) <= h(X - i) + h(Y + i)                 or
//   h(X) + h(Y) <= h(X - i + j) + h(Y + i - j)         for some j in Y - X.
// X and Y are scanned in LexLess order and i ascending; the first (X, Y, i)
// with no valid option is returned.
ExchangeCheck CheckExchangeProperty(const SetFunctionOracle& h,
                                    int cap = Caps().exchange,
                                    double tol = kTolerance);

// Same check over a precomputed table.
ExchangeCheck CheckExchangeProperty(const ValueTable& h,
                                    double tol = kTolerance);

// Smallest j in xb - xa with
//   h(xa) + h(xb) <= h(xa - i + j) + h(xb + i - j) + tol.
// Requires |xa| == |xb| and i in xa - xb. Throws IntegrityError with the
// failing (xa, xb, i) when no j qualifies.
int ExchangePartner(const MNatConcaveFn& h, Subset xa, Subset xb, int i,
                    double tol = kTolerance);

}  // namespace hcurv

#endif  // HCURV_MCONCAVE_EXCHANGE_H_
