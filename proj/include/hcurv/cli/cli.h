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

#ifndef HCURV_CLI_CLI_H_
#define HCURV_CLI_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace hcurv::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,         // bad flags or a malformed instance
  kVerifyFailed = 2,  // some check found a violation
  kInfeasible = 3,    // e.g. k > n
  kCapExceeded = 4,   // an exhaustive step was asked to run above its cap
};

// Environment variables that override the default caps.
inline constexpr char kOptCapEnv[] = "HCURV_OPT_CAP";
inline constexpr char kCheckCapEnv[] = "HCURV_CHECK_CAP";

// Runs `hcurv <args...>` (args excludes the program name). Reports go to
// out unless --out is given; messages go to err.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Drops the volatile "timestamp" and "wall_time_ms" fields from a JSON
// report so two runs can be compared byte for byte.
std::string StripVolatile(const std::string& json_text);

}  // namespace hcurv::cli

#endif  // HCURV_CLI_CLI_H_
