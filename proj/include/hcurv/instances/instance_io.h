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

#ifndef HCURV_INSTANCES_INSTANCE_IO_H_
#define HCURV_INSTANCES_INSTANCE_IO_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hcurv/decompose/decomposition.h"
#include "hcurv/instances/coverage.h"
#include "hcurv/instances/facility.h"
#include "hcurv/instances/wrs.h"
#include "hcurv/mconcave/matroid.h"
#include "hcurv/mconcave/mnat_concave.h"
#include "hcurv/setfn/config.h"
#include "hcurv/setfn/set_function.h"
#include "json.hpp"

namespace hcurv {

// A malformed instance document. line() is 1-based, 0 when unknown.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& what, int line, std::string pointer);

  int line() const { return line_; }
  const std::string& pointer() const { return pointer_; }

 private:
  int line_;
  std::string pointer_;
};

// An explicit table of 2^n values, values[mask].
struct TableInstance {
  int n = 0;
  std::vector<double> values;
};

using InstanceData =
    std::variant<CoverageInstance, FacilityLocationInstance,
                 WeightedRankSumInstance, MNatConcaveFn, TableInstance>;

// Families: "coverage", "facility", "wrs", "mnat", "table".
struct Instance {
  std::string family;
  int n = 0;
  uint64_t seed = 0;
  InstanceData data;
};

Instance MakeInstance(CoverageInstance inst, uint64_t seed = 0);
Instance MakeInstance(FacilityLocationInstance inst, uint64_t seed = 0);
Instance MakeInstance(WeightedRankSumInstance inst, uint64_t seed = 0);
Instance MakeInstance(MNatConcaveFn h, uint64_t seed = 0);
Instance MakeInstance(TableInstance inst, uint64_t seed = 0);

SetFunctionOracle InstanceFunction(const Instance& inst);

nlohmann::ordered_json MatroidToJson(const Matroid& m);
nlohmann::ordered_json MNatToJson(const MNatConcaveFn& h);
nlohmann::ordered_json InstanceToJson(const Instance& inst);

// Throw SchemaError with the offending JSON pointer.
Matroid MatroidFromJson(const nlohmann::json& j, int n,
                        const std::string& pointer = "");
MNatConcaveFn MNatFromJson(const nlohmann::json& j, int n,
                           const std::string& pointer = "");
Instance InstanceFromJson(const nlohmann::json& j);

// Two-space indented JSON in which arrays of scalars stay on one line.
// Optionally prints integral doubles as integers.
std::string DumpJson(const nlohmann::ordered_json& j,
                     bool integral_floats_as_ints = false);

// DumpJson (integral doubles as integers) plus a trailing newline.
std::string SerializeInstance(const Instance& inst);
// Syntax and schema errors carry the line of the offending value.
Instance ParseInstance(std::string_view text);
Instance LoadInstance(const std::string& path);
void SaveInstance(const Instance& inst, const std::string& path);

// "trivial", "quadratic", "family", plus "mixture" for wrs and "identity"
// for mnat.
std::vector<std::string> DecompositionMethods(std::string_view family);

// Throws PreconditionError for a method the family does not support.
Decomposition DecomposeInstance(const Instance& inst, std::string_view method,
                                int cap = Caps().h_curvature);

}  // namespace hcurv

#endif  // HCURV_INSTANCES_INSTANCE_IO_H_
