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

#include "hcurv/mconcave/exchange.h"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "hcurv/setfn/errors.h"

namespace hcurv {

std::string ExchangeWitness::ToString() const {
  std::ostringstream out;
  out << "X=" << hcurv::ToString(x) << " Y=" << hcurv::ToString(y)
      << " i=" << i;
  return out.str();
}

ExchangeCheck CheckExchangeProperty(const ValueTable& h, double tol) {
  const int n = h.n();
  std::vector<Subset> all;
  all.reserve(size_t{1} << n);
  ForEachSubsetLex(n, n, [&](Subset s) {
    all.push_back(s);
    return true;
  });

  ExchangeCheck result;
  for (Subset x : all) {
    if (x.Empty()) continue;
    const double hx = h[x];
    for (Subset y : all) {
      const Subset only_x = x - y;
      if (only_x.Empty()) continue;
      const double lhs = hx + h[y] - tol;
      const Subset only_y = y - x;
      bool failed = false;
      only_x.ForEach([&](int i) {
        if (failed) return;
        const Subset x_minus = x.Without(i);
        const Subset y_plus = y.With(i);
        if (lhs <= h[x_minus] + h[y_plus]) return;
        bool found = false;
        only_y.ForEach([&](int j) {
          if (!found && lhs <= h[x_minus.With(j)] + h[y_plus.Without(j)]) {
            found = true;
          }
        });
        if (!found) {
          failed = true;
          result.ok = false;
          result.witness = ExchangeWitness{x, y, i};
        }
      });
      if (failed) return result;
    }
  }
  return result;
}

ExchangeCheck CheckExchangeProperty(const SetFunctionOracle& h, int cap,
                                    double tol) {
  if (h.n() > cap) throw CapExceededError("CheckExchangeProperty", h.n(), cap);
  return CheckExchangeProperty(ValueTable::Build(h), tol);
}

int ExchangePartner(const MNatConcaveFn& h, Subset xa, Subset xb, int i,
                    double tol) {
  if (xa.Size() != xb.Size()) {
    throw PreconditionError("ExchangePartner: sets differ in size");
  }
  if (!xa.Contains(i) || xb.Contains(i)) {
    throw PreconditionError("ExchangePartner: element " + std::to_string(i) +
                            " must lie in Xa - Xb");
  }
  const Subset candidates = xb - xa;
  if (candidates.Empty()) {
    throw PreconditionError("ExchangePartner: Xb - Xa is empty");
  }
  const double lhs = h.Value(xa) + h.Value(xb);
  const Subset xa_minus = xa.Without(i);
  const Subset xb_plus = xb.With(i);
  int partner = -1;
  candidates.ForEach([&](int j) {
    if (partner >= 0) return;
    if (lhs <= h.Value(xa_minus.With(j)) + h.Value(xb_plus.Without(j)) + tol) {
      partner = j;
    }
  });
  if (partner < 0) {
    std::ostringstream msg;
    msg << "no exchange partner for Xa=" << ToString(xa)
        << " Xb=" << ToString(xb) << " i=" << i << " in " << h.KindName()
        << " function";
    throw IntegrityError(msg.str());
  }
  return partner;
}

}  // namespace hcurv
