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

#include "hcurv/optimizer/pareto.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "hcurv/mconcave/greedy.h"
#include "hcurv/setfn/errors.h"

namespace hcurv {
namespace {

class FrontierSearch {
 public:
  FrontierSearch(std::span<const double> grad, const MNatConcaveFn& h, int k)
      : grad_(grad), h_(h), k_(k) {
    if (static_cast<int>(grad.size()) != h.n()) {
      throw PreconditionError("gradient and h sizes differ");
    }
    if (k < 0 || k > h.n()) {
      throw PreconditionError("cardinality " + std::to_string(k) +
                              " outside [0, n]");
    }
    for (double v : grad) {
      if (!std::isfinite(v)) throw PreconditionError("gradient not finite");
    }
  }

  // argmax a * grad(Y) + b * h(Y) over |Y| = k.
  FrontierPoint Best(double a, double b) const {
    const SubsetValue best = GreedyMaximize(h_.n(), k_, [&](Subset y) {
      double total = 0.0;
      if (a != 0.0) total += a * Lin(y);
      if (b != 0.0) total += b * h_.Value(y);
      return total;
    });
    return Point(best.set);
  }

  FrontierPoint Point(Subset y) const { return {y, Lin(y), h_.Value(y)}; }

  // A point strictly above the segment p -> q (p has the larger lin), or
  // nullopt when the segment is a hull edge.
  std::optional<FrontierPoint> Above(const FrontierPoint& p,
                                     const FrontierPoint& q) const {
    const double a = q.clo - p.clo;
    const double b = p.lin - q.lin;
    const FrontierPoint r = Best(a, b);
    const double on_segment = a * p.lin + b * p.clo;
    const double score = a * r.lin + b * r.clo;
    const double scale = std::abs(a * p.lin) + std::abs(b * p.clo) + 1.0;
    if (score > on_segment + 1e-11 * scale) return r;
    return std::nullopt;
  }

 private:
  double Lin(Subset y) const {
    double total = 0.0;
    y.ForEach([&](int i) { total += grad_[i]; });
    return total;
  }

  std::span<const double> grad_;
  const MNatConcaveFn& h_;
  int k_;
};

void Refine(const FrontierSearch& search, const FrontierPoint& p,
            const FrontierPoint& q, std::vector<FrontierPoint>& out) {
  const auto r = search.Above(p, q);
  if (!r) return;
  Refine(search, p, *r, out);
  out.push_back(*r);
  Refine(search, *r, q, out);
}

// Keeps the points no other point weakly dominates (first copy of
// duplicates).
std::vector<FrontierPoint> Prune(const std::vector<FrontierPoint>& pts) {
  constexpr double kEps = 1e-12;
  std::vector<FrontierPoint> out;
  for (size_t a = 0; a < pts.size(); ++a) {
    bool dominated = false;
    for (size_t b = 0; b < pts.size() && !dominated; ++b) {
      if (b == a) continue;
      const bool geq = pts[b].clo >= pts[a].clo - kEps &&
                       pts[b].lin >= pts[a].lin - kEps;
      const bool strict = pts[b].clo > pts[a].clo + kEps ||
                          pts[b].lin > pts[a].lin + kEps;
      dominated = geq && (strict || b < a);
    }
    if (!dominated) out.push_back(pts[a]);
  }
  return out;
}

DirectionResult Mix(int n, int k, const FrontierPoint& a,
                    const FrontierPoint& b, double theta) {
  ConvexCombination comb;
  comb.cardinality = k;
  if (theta > 0.0) comb.terms.push_back({theta, b.set});
  if (theta < 1.0) comb.terms.push_back({1.0 - theta, a.set});
  comb = comb.Normalized();
  return DirectionResult{FractionalPoint(comb.Point(n)), comb,
                         (1.0 - theta) * a.lin + theta * b.lin,
                         (1.0 - theta) * a.clo + theta * b.clo};
}

}  // namespace

std::vector<FrontierPoint> ParetoFrontier(std::span<const double> grad,
                                          const MNatConcaveFn& h, int k) {
  const FrontierSearch search(grad, h, k);
  const FrontierPoint p = search.Best(1.0, 0.0);
  const FrontierPoint q = search.Best(0.0, 1.0);
  std::vector<FrontierPoint> pts{p};
  Refine(search, p, q, pts);
  pts.push_back(q);
  std::vector<FrontierPoint> out = Prune(pts);
  std::stable_sort(out.begin(), out.end(),
                   [](const FrontierPoint& x, const FrontierPoint& y) {
                     return x.clo < y.clo;
                   });
  return out;
}

std::optional<DirectionResult> ParetoDirection(std::span<const double> grad,
                                               const MNatConcaveFn& h, int k,
                                               double alpha, double beta,
                                               double tol) {
  const FrontierSearch search(grad, h, k);
  const int n = h.n();
  FrontierPoint p = search.Best(1.0, 0.0);
  std::optional<DirectionResult> out;
  if (p.clo >= beta - tol) {
    out = Mix(n, k, p, p, 0.0);
  } else {
    FrontierPoint q = search.Best(0.0, 1.0);
    if (q.clo < beta - tol) return std::nullopt;
    // Narrow p -> q down to the hull edge crossing clo = beta.
    while (true) {
      const auto r = search.Above(p, q);
      if (!r) break;
      if (r->clo >= beta - tol) {
        q = *r;
      } else {
        p = *r;
      }
    }
    if (q.lin >= p.lin - tol || q.clo <= beta + tol) {
      out = Mix(n, k, q, q, 0.0);
    } else {
      const double theta = std::clamp((beta - p.clo) / (q.clo - p.clo), 0.0,
                                      1.0);
      out = Mix(n, k, p, q, theta);
    }
  }
  if (out->lin < alpha - tol) return std::nullopt;
  return out;
}

}  // namespace hcurv
