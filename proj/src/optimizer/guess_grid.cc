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

#include "hcurv/optimizer/guess_grid.h"

#include <algorithm>
#include <cmath>

#include "hcurv/setfn/errors.h"

namespace hcurv {

double MaxSingletonValue(const SetFunctionOracle& g, const MNatConcaveFn& h) {
  if (g.n() != h.n()) throw PreconditionError("g and h ground sets differ");
  double m = 0.0;
  for (int i = 0; i < g.n(); ++i) {
    const Subset s = Subset().With(i);
    m = std::max({m, g.Value(s), h.Value(s)});
  }
  return m;
}

std::vector<double> GuessValues(double m, int n, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw PreconditionError("epsilon must lie in (0, 1)");
  }
  if (n < 1) throw PreconditionError("GuessValues: n must be positive");
  if (!(m > 0.0)) return {0.0};
  std::vector<double> values;
  const int additive = static_cast<int>(std::floor(1.0 / epsilon + 1e-9));
  for (int i = 0; i <= additive; ++i) values.push_back(i * epsilon * m);
  const double ratio = 1.0 + epsilon / n;
  const int geometric =
      static_cast<int>(std::floor(std::log(n) / std::log(ratio) + 1e-9));
  for (int i = 0; i <= geometric; ++i) {
    values.push_back(std::pow(ratio, i) * m);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end(),
                           [m](double a, double b) {
                             return std::abs(a - b) <= 1e-12 * m;
                           }),
               values.end());
  return values;
}

GuessGrid MakeGuessGrid(const SetFunctionOracle& g, const MNatConcaveFn& h,
                        double epsilon) {
  GuessGrid grid;
  grid.m = MaxSingletonValue(g, h);
  grid.alpha = GuessValues(grid.m, g.n(), epsilon);
  grid.beta = grid.alpha;
  return grid;
}

}  // namespace hcurv
