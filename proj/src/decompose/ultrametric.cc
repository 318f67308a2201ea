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

#include "hcurv/decompose/ultrametric.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <tuple>
#include <utility>

#include "hcurv/setfn/errors.h"

namespace hcurv {
namespace {

// Slack for comparing sums like H_kl + (H_ij - H_kl) against H_ij.
constexpr double kFitSlack = 1e-9;

// True when the subdominant ultrametric of u stays >= lower on every pair
// other than `skip` (pass skip = {-1, -1} to check all pairs).
bool ClosureCovers(const SymmetricMatrix& u, const SymmetricMatrix& lower,
                   std::pair<int, int> skip) {
  const SymmetricMatrix closure = SubdominantUltrametric(u);
  const int n = u.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (i == skip.first && j == skip.second) continue;
      if (closure(i, j) < lower(i, j) - kFitSlack) return false;
    }
  }
  return true;
}

SymmetricMatrix UpperBox(const SymmetricMatrix& h, double radius) {
  SymmetricMatrix u(h.n());
  for (int i = 0; i < h.n(); ++i) {
    for (int j = i + 1; j < h.n(); ++j) {
      u.Set(i, j, std::min(0.0, h(i, j) + radius));
    }
  }
  return u;
}

}  // namespace

std::optional<std::array<int, 3>> FindUltrametricViolation(
    const SymmetricMatrix& a, double tol) {
  const int n = a.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (a(i, j) > std::max(a(i, k), a(j, k)) + tol) {
          return std::array<int, 3>{i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

SymmetricMatrix SubdominantUltrametric(const SymmetricMatrix& u) {
  SymmetricMatrix s = u;
  const int n = u.n();
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      for (int j = i + 1; j < n; ++j) {
        if (j == k) continue;
        const double via = std::max(s(i, k), s(k, j));
        if (via < s(i, j)) s.Set(i, j, via);
      }
    }
  }
  return s;
}

UltrametricFit FitUltrametric(const SymmetricMatrix& h) {
  const int n = h.n();
  SymmetricMatrix lower(n);
  std::vector<double> entries;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!std::isfinite(h(i, j)) || h(i, j) > kTolerance) {
        throw PreconditionError("FitUltrametric: bounds must be finite and <= 0");
      }
      lower.Set(i, j, std::min(0.0, h(i, j)));
      entries.push_back(lower(i, j));
    }
  }

  UltrametricFit fit{SymmetricMatrix(n), 0.0};
  if (entries.empty()) return fit;

  std::vector<double> radii{0.0};
  for (size_t a = 0; a < entries.size(); ++a) {
    radii.push_back(-entries[a]);
    for (size_t b = a + 1; b < entries.size(); ++b) {
      radii.push_back(std::abs(entries[a] - entries[b]));
    }
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

  // The largest candidate, max |H_ij|, gives the upper box 0, which is
  // always feasible.
  size_t lo = 0;
  size_t hi = radii.size() - 1;
  while (lo < hi) {
    const size_t mid = lo + (hi - lo) / 2;
    if (ClosureCovers(UpperBox(lower, radii[mid]), lower, {-1, -1})) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const double radius = radii[lo];
  SymmetricMatrix upper = UpperBox(lower, radius);

  // Pin pairs one at a time, last pair first, to the smallest value that
  // keeps the box problem feasible. Lowering the pinned entry can only hurt
  // the other pairs, so that part of feasibility is monotone and its
  // threshold is one of the current lower bounds.
  for (int i = n - 1; i >= 0; --i) {
    for (int j = n - 1; j > i; --j) {
      const double lo_v = lower(i, j);
      const double hi_v = upper(i, j);
      std::vector<double> candidates{hi_v};
      for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
          const double v = lower(p, q);
          if (v >= lo_v && v <= hi_v) candidates.push_back(v);
        }
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()),
                       candidates.end());
      size_t a = 0;
      size_t b = candidates.size() - 1;
      while (a < b) {
        const size_t mid = a + (b - a) / 2;
        SymmetricMatrix trial = upper;
        trial.Set(i, j, candidates[mid]);
        if (ClosureCovers(trial, lower, {i, j})) {
          b = mid;
        } else {
          a = mid + 1;
        }
      }
      const double value = candidates[a];
      lower.Set(i, j, value);
      upper.Set(i, j, value);
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double value = std::clamp(upper(i, j), std::min(0.0, h(i, j)), 0.0);
      fit.a.Set(i, j, value);
      fit.error = std::max(fit.error, std::abs(value - h(i, j)));
    }
  }
  return fit;
}

SymmetricMatrix LaminarQuadraticRep::Reconstruct() const {
  const int n = static_cast<int>(d.size());
  SymmetricMatrix a(n);
  for (int i = 0; i < n; ++i) a.Set(i, i, d[i]);
  for (size_t l = 0; l < sets.size(); ++l) {
    const std::vector<int> members = sets[l].Elements();
    for (size_t p = 0; p < members.size(); ++p) {
      for (size_t q = p; q < members.size(); ++q) {
        const int i = members[p];
        const int j = members[q];
        a.Set(i, j, a(i, j) + lambda[l]);
      }
    }
  }
  return a;
}

LaminarQuadraticRep LaminarFromUltrametric(const SymmetricMatrix& a,
                                           double tol) {
  const int n = a.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (a(i, j) > tol) {
        std::ostringstream msg;
        msg << "LaminarFromUltrametric: A(" << i << "," << j << ") = "
            << a(i, j) << " is positive";
        throw PreconditionError(msg.str());
      }
    }
  }
  if (const auto bad = FindUltrametricViolation(a, tol)) {
    std::ostringstream msg;
    msg << "LaminarFromUltrametric: triple (" << (*bad)[0] << "," << (*bad)[1]
        << "," << (*bad)[2] << ") violates A_ij <= max(A_ik, A_jk)";
    throw PreconditionError(msg.str());
  }

  std::vector<std::tuple<double, int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      pairs.emplace_back(std::min(0.0, a(i, j)), i, j);
    }
  }
  std::sort(pairs.begin(), pairs.end());

  // Merge-tree nodes; the first n are the leaves.
  struct Node {
    Subset members;
    double level = 0.0;
    int parent = -1;
  };
  std::vector<Node> nodes(n);
  std::vector<int> root_of(n);
  for (int i = 0; i < n; ++i) {
    nodes[i].members = Subset().With(i);
    root_of[i] = i;
  }
  auto find_root = [&](int node) {
    while (nodes[node].parent >= 0) node = nodes[node].parent;
    return node;
  };
  for (const auto& [value, i, j] : pairs) {
    const int ri = find_root(i);
    const int rj = find_root(j);
    if (ri == rj) continue;
    nodes.push_back({nodes[ri].members | nodes[rj].members, value, -1});
    const int merged = static_cast<int>(nodes.size()) - 1;
    nodes[ri].parent = merged;
    nodes[rj].parent = merged;
  }

  LaminarQuadraticRep rep;
  rep.d.resize(n);
  for (int i = 0; i < n; ++i) rep.d[i] = a(i, i);
  for (size_t v = n; v < nodes.size(); ++v) {
    const double parent_level =
        nodes[v].parent >= 0 ? nodes[nodes[v].parent].level : 0.0;
    const double lambda = nodes[v].level - parent_level;
    if (lambda == 0.0) continue;
    rep.sets.push_back(nodes[v].members);
    rep.lambda.push_back(lambda);
    nodes[v].members.ForEach([&](int i) { rep.d[i] -= lambda; });
  }
  return rep;
}

}  // namespace hcurv
