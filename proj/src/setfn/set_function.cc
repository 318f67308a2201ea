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

#include "hcurv/setfn/set_function.h"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "hcurv/setfn/config.h"
#include "hcurv/setfn/errors.h"

namespace hcurv {

SetFunctionOracle::SetFunctionOracle(int n, Evaluator eval, std::string name)
    : state_(std::make_shared<State>()) {
  GroundSet ground(n);  // validates n
  if (!eval) throw PreconditionError("set function needs an evaluator");
  state_->n = ground.size();
  state_->eval = std::move(eval);
  state_->name = std::move(name);
  state_->empty_value = state_->eval(Subset());
  state_->normalized = std::abs(state_->empty_value) <= kTolerance;
}

double SetFunctionOracle::Value(Subset s) const {
  state_->calls.fetch_add(1, std::memory_order_relaxed);
  return state_->eval(s);
}

SetFunctionOracle SetFunctionOracle::Normalized() const {
  if (normalized()) return *this;
  const double shift = state_->empty_value;
  Evaluator inner = state_->eval;
  return SetFunctionOracle(
      n(), [inner, shift](Subset s) { return inner(s) - shift; }, name());
}

SetFunctionOracle SetFunctionOracle::WithFreshCounter(std::string name) const {
  auto state = std::make_shared<State>();
  state->n = state_->n;
  state->eval = state_->eval;
  state->name = std::move(name);
  state->normalized = state_->normalized;
  state->empty_value = state_->empty_value;
  return SetFunctionOracle(std::move(state));
}

double Marginal(const SetFunctionOracle& f, int i, Subset x) {
  if (i < 0 || i >= f.n()) {
    throw PreconditionError("Marginal: element " + std::to_string(i) +
                            " outside the ground set");
  }
  if (x.Contains(i)) {
    throw PreconditionError("Marginal: element " + std::to_string(i) +
                            " already in " + ToString(x));
  }
  if (x.Empty() && f.normalized()) return f.Value(x.With(i));
  return f.Value(x.With(i)) - f.Value(x);
}

double LastMarginal(const SetFunctionOracle& f, int i) {
  return Marginal(f, i, Subset::Full(f.n()).Without(i));
}

SetFunctionOracle ModularFunction(std::vector<double> weights) {
  const int n = static_cast<int>(weights.size());
  return SetFunctionOracle(
      n,
      [w = std::move(weights)](Subset s) {
        double total = 0.0;
        s.ForEach([&](int i) { total += w[i]; });
        return total;
      },
      "modular");
}

SetFunctionOracle CardinalityFunction(int n, std::function<double(int)> phi,
                                      std::string name) {
  const double phi0 = phi(0);
  return SetFunctionOracle(
      n, [phi = std::move(phi), phi0](Subset s) { return phi(s.Size()) - phi0; },
      std::move(name));
}

SetFunctionOracle ZeroFunction(int n) {
  return SetFunctionOracle(n, [](Subset) { return 0.0; }, "zero");
}

SetFunctionOracle Sum(const SetFunctionOracle& f, const SetFunctionOracle& g,
                      std::string name) {
  if (f.n() != g.n()) throw PreconditionError("Sum: ground sets differ");
  return SetFunctionOracle(
      f.n(), [f, g](Subset s) { return f.Value(s) + g.Value(s); },
      std::move(name));
}

SetFunctionOracle Difference(const SetFunctionOracle& f,
                             const SetFunctionOracle& g, std::string name) {
  if (f.n() != g.n()) throw PreconditionError("Difference: ground sets differ");
  return SetFunctionOracle(
      f.n(), [f, g](Subset s) { return f.Value(s) - g.Value(s); },
      std::move(name));
}

ValueTable ValueTable::Build(const SetFunctionOracle& f) {
  if (f.n() > kMaxTableSize) {
    throw CapExceededError("ValueTable::Build", f.n(), kMaxTableSize);
  }
  const uint64_t count = uint64_t{1} << f.n();
  std::vector<double> values(count);
  for (uint64_t mask = 0; mask < count; ++mask) {
    values[mask] = f.Value(Subset::FromMask(mask));
  }
  return ValueTable(f.n(), std::move(values));
}

ValueTable ValueTable::FromValues(int n, std::vector<double> values) {
  if (n < 1 || n > kMaxTableSize) {
    throw CapExceededError("ValueTable::FromValues", n, kMaxTableSize);
  }
  if (values.size() != (size_t{1} << n)) {
    throw PreconditionError("value table needs 2^n = " +
                            std::to_string(size_t{1} << n) + " entries, got " +
                            std::to_string(values.size()));
  }
  return ValueTable(n, std::move(values));
}

SetFunctionOracle ValueTable::AsOracle(std::string name) const {
  auto values = std::make_shared<const std::vector<double>>(values_);
  return SetFunctionOracle(
      n_, [values](Subset s) { return (*values)[s.mask()]; }, std::move(name));
}

}  // namespace hcurv
