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

#ifndef HCURV_SETFN_ERRORS_H_
#define HCURV_SETFN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace hcurv {

// A caller broke a documented precondition (element already in the set,
// k > n, malformed matrix, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive routine was asked to run above its enumeration cap.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(const std::string& what, int n, int cap)
      : std::runtime_error(what + " (n=" + std::to_string(n) +
                           ", cap=" + std::to_string(cap) + ")"),
        n_(n),
        cap_(cap) {}

  int n() const { return n_; }
  int cap() const { return cap_; }

 private:
  int n_;
  int cap_;
};

// A structural guarantee failed at runtime, e.g. no exchange partner exists
// for a function that was supposed to be M-natural concave.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hcurv

#endif  // HCURV_SETFN_ERRORS_H_
