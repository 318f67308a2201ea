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
// Subsets of a small ground set {0, ..., n-1}, stored as a 64-bit mask.
//

#ifndef HCURV_SETFN_SUBSET_H_
#define HCURV_SETFN_SUBSET_H_

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hcurv {

inline constexpr int kMaxGroundSize = 64;

class Subset {
 public:
  constexpr Subset() = default;

  static constexpr Subset FromMask(uint64_t mask) { return Subset(mask); }
  static Subset Of(std::initializer_list<int> elements);
  static Subset Of(std::span<const int> elements);
  // {0, ..., n-1}.
  static Subset Full(int n);

  uint64_t mask() const { return bits_; }
  int Size() const { return std::popcount(bits_); }
  bool Empty() const { return bits_ == 0; }
  bool Contains(int i) const { return (bits_ >> i) & 1U; }

  Subset With(int i) const { return Subset(bits_ | (uint64_t{1} << i)); }
  Subset Without(int i) const { return Subset(bits_ & ~(uint64_t{1} << i)); }

  // Smallest element, or -1 for the empty set.
  int Lowest() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  bool IsSubsetOf(Subset other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<int> Elements() const;

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      fn(std::countr_zero(rest));
    }
  }

  friend Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  // Set difference.
  friend Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend bool operator==(Subset a, Subset b) = default;

 private:
  explicit constexpr Subset(uint64_t bits) : bits_(bits) {}

  uint64_t bits_ = 0;
};

// Lexicographic order of the sorted element lists: {} < {0} < {0,1} < {0,2}
// < {1}. This is the tie-break order used by every deterministic search.
bool LexLess(Subset a, Subset b);

struct LexOrder {
  bool operator()(Subset a, Subset b) const { return LexLess(a, b); }
};

// "{0,2,5}".
std::string ToString(Subset s);

// Visits every subset of {0..n-1} with at most max_size elements, in LexLess
// order. The callback returns false to stop early.
void ForEachSubsetLex(int n, int max_size,
                      const std::function<bool(Subset)>& visit);

// Visits the subsets of exactly `size` elements in LexLess order.
void ForEachSubsetOfSizeLex(int n, int size,
                            const std::function<bool(Subset)>& visit);

std::vector<Subset> SubsetsOfSize(int n, int size);

// Number of k-element subsets of an n-set (saturates at UINT64_MAX).
uint64_t Binomial(int n, int k);

// The ground set E = {0..n-1}.
class GroundSet {
 public:
  explicit GroundSet(int n);

  int size() const { return n_; }
  Subset Full() const { return Subset::Full(n_); }
  bool Contains(Subset s) const { return s.IsSubsetOf(Full()); }

 private:
  int n_;
};

}  // namespace hcurv

template <>
struct std::hash<hcurv::Subset> {
  size_t operator()(hcurv::Subset s) const noexcept {
    return std::hash<uint64_t>()(s.mask());
  }
};

#endif  // HCURV_SETFN_SUBSET_H_
