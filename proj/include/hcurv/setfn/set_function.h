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
// Value oracles for set functions f : 2^E -> R.
//

#ifndef HCURV_SETFN_SET_FUNCTION_H_
#define HCURV_SETFN_SET_FUNCTION_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hcurv/setfn/subset.h"

namespace hcurv {

// A value oracle with an exact call counter. Copies share the evaluator and
// the counter, so handing an oracle to several algorithms accumulates all of
// their calls in one place. The counter is atomic; concurrent evaluation is
// safe as long as the evaluator itself is pure.
class SetFunctionOracle {
 public:
  using Evaluator = std::function<double(Subset)>;

  SetFunctionOracle(int n, Evaluator eval, std::string name = "f");

  int n() const { return state_->n; }
  const std::string& name() const { return state_->name; }

  // One counted oracle call.
  double Value(Subset s) const;
  double operator()(Subset s) const { return Value(s); }

  int64_t calls() const { return state_->calls.load(); }
  void ResetCalls() const { state_->calls.store(0); }

  // True when f(empty) == 0. Determined once at construction (not counted).
  bool normalized() const { return state_->normalized; }

  // The shifted function f - f(empty). Returns *this when already normalized.
  SetFunctionOracle Normalized() const;

  // Shares the evaluator but starts a fresh counter.
  SetFunctionOracle WithFreshCounter(std::string name) const;

 private:
  struct State {
    int n = 0;
    Evaluator eval;
    std::string name;
    bool normalized = false;
    double empty_value = 0.0;
    std::atomic<int64_t> calls{0};
  };

  explicit SetFunctionOracle(std::shared_ptr<State> state)
      : state_(std::move(state)) {}

  std::shared_ptr<State> state_;
};

// f(i | X) = f(X + i) - f(X). Two oracle calls, or one when X is empty and f
// is normalized. Throws PreconditionError when i is already in X.
double Marginal(const SetFunctionOracle& f, int i, Subset x);

// f(i | E - i).
double LastMarginal(const SetFunctionOracle& f, int i);

// Common closed-form functions, mostly for tests and examples.
SetFunctionOracle ModularFunction(std::vector<double> weights);
SetFunctionOracle CardinalityFunction(int n, std::function<double(int)> phi,
                                      std::string name);
SetFunctionOracle ZeroFunction(int n);

// f + g and f - g as oracles. Each evaluation calls both operands once.
SetFunctionOracle Sum(const SetFunctionOracle& f, const SetFunctionOracle& g,
                      std::string name);
SetFunctionOracle Difference(const SetFunctionOracle& f,
                             const SetFunctionOracle& g, std::string name);

// Dense table of all 2^n values, indexed by mask. This is the single memo
// layer used by the exhaustive routines; building it costs 2^n oracle calls.
class ValueTable {
 public:
  static ValueTable Build(const SetFunctionOracle& f);
  static ValueTable FromValues(int n, std::vector<double> values);

  int n() const { return n_; }
  double operator[](Subset s) const { return values_[s.mask()]; }
  std::span<const double> values() const { return values_; }

  // An oracle that reads from this table.
  SetFunctionOracle AsOracle(std::string name = "table") const;

 private:
  ValueTable(int n, std::vector<double> values)
      : n_(n), values_(std::move(values)) {}

  int n_;
  std::vector<double> values_;
};

// Largest n for which ValueTable::Build is permitted.
inline constexpr int kMaxTableSize = 26;

}  // namespace hcurv

#endif  // HCURV_SETFN_SET_FUNCTION_H_
