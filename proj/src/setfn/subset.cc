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

#include "hcurv/setfn/subset.h"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "hcurv/setfn/errors.h"

namespace hcurv {
namespace {

void CheckElement(int i) {
  if (i < 0 || i >= kMaxGroundSize) {
    throw PreconditionError("element index out of range: " + std::to_string(i));
  }
}

// Preorder DFS over increasing element sequences is exactly LexLess order.
bool VisitLex(int n, int max_size, int exact_size, int next, Subset current,
              const std::function<bool(Subset)>& visit) {
  if (exact_size < 0 || current.Size() == exact_size) {
    if (!visit(current)) return false;
  }
  if (current.Size() == max_size) return true;
  for (int i = next; i < n; ++i) {
    if (exact_size >= 0 && current.Size() + (n - i) < exact_size) break;
    if (!VisitLex(n, max_size, exact_size, i + 1, current.With(i), visit)) {
      return false;
    }
  }
  return true;
}

}  // namespace

Subset Subset::Of(std::initializer_list<int> elements) {
  return Of(std::span<const int>(elements.begin(), elements.size()));
}

Subset Subset::Of(std::span<const int> elements) {
  uint64_t bits = 0;
  for (int i : elements) {
    CheckElement(i);
    bits |= uint64_t{1} << i;
  }
  return Subset(bits);
}

Subset Subset::Full(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw PreconditionError("ground set size out of range: " +
                            std::to_string(n));
  }
  if (n == kMaxGroundSize) return Subset(~uint64_t{0});
  return Subset((uint64_t{1} << n) - 1);
}

std::vector<int> Subset::Elements() const {
  std::vector<int> out;
  out.reserve(Size());
  ForEach([&](int i) { out.push_back(i); });
  return out;
}

bool LexLess(Subset a, Subset b) {
  const uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  const int m = std::countr_zero(diff);
  // Elements below m are shared. Whichever set holds m continues with m; the
  // other continues with something larger than m, or ends (and is a prefix).
  const uint64_t above = (m + 1 >= 64) ? 0 : (~uint64_t{0} << (m + 1));
  if (a.Contains(m)) {
    return (b.mask() & above) != 0;
  }
  return (a.mask() & above) == 0;
}

std::string ToString(Subset s) {
  std::string out = "{";
  bool first = true;
  s.ForEach([&](int i) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  });
  out += "}";
  return out;
}

void ForEachSubsetLex(int n, int max_size,
                      const std::function<bool(Subset)>& visit) {
  if (n < 0 || n > kMaxGroundSize) {
    throw PreconditionError("ground set size out of range");
  }
  VisitLex(n, max_size, -1, 0, Subset(), visit);
}

void ForEachSubsetOfSizeLex(int n, int size,
                            const std::function<bool(Subset)>& visit) {
  if (n < 0 || n > kMaxGroundSize) {
    throw PreconditionError("ground set size out of range");
  }
  if (size < 0 || size > n) return;
  VisitLex(n, size, size, 0, Subset(), visit);
}

std::vector<Subset> SubsetsOfSize(int n, int size) {
  std::vector<Subset> out;
  ForEachSubsetOfSizeLex(n, size, [&](Subset s) {
    out.push_back(s);
    return true;
  });
  return out;
}

uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __extension__ using Wide = unsigned __int128;
  Wide result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > std::numeric_limits<uint64_t>::max()) {
      return std::numeric_limits<uint64_t>::max();
    }
  }
  return static_cast<uint64_t>(result);
}

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw PreconditionError("ground set needs 1.." +
                            std::to_string(kMaxGroundSize) +
                            " elements, got " + std::to_string(n));
  }
}

}  // namespace hcurv
