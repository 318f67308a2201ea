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

#include "hcurv/mconcave/mnat_concave.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "hcurv/setfn/errors.h"

namespace hcurv {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void CheckWeights(const char* what, const std::vector<double>& w) {
  for (size_t i = 0; i < w.size(); ++i) {
    if (!std::isfinite(w[i]) || w[i] < 0.0) {
      throw PreconditionError(std::string(what) + ": weight " +
                              std::to_string(i) + " must be finite and >= 0");
    }
  }
}

double EvaluateLaminar(const LaminarConcave& h, Subset x) {
  double total = 0.0;
  const auto& family = h.family;
  for (size_t l = 0; l < family.sets.size(); ++l) {
    total += family.phi[l][(x & family.sets[l]).Size()];
  }
  return total;
}

double EvaluateRank(const WeightedMatroidRank& h, Subset x) {
  const Matroid& m = h.matroid;
  switch (m.kind()) {
    case Matroid::Kind::kUniform: {
      int room = m.uniform_rank();
      double total = 0.0;
      for (int e : h.order) {
        if (room == 0) break;
        if (x.Contains(e)) {
          total += h.weights[e];
          --room;
        }
      }
      return total;
    }
    case Matroid::Kind::kPartition: {
      std::vector<int> room = m.capacities();
      const auto& blocks = m.blocks();
      double total = 0.0;
      for (int e : h.order) {
        if (!x.Contains(e)) continue;
        for (size_t b = 0; b < blocks.size(); ++b) {
          if (blocks[b].Contains(e)) {
            if (room[b] > 0) {
              total += h.weights[e];
              --room[b];
            }
            break;
          }
        }
      }
      return total;
    }
    case Matroid::Kind::kCustom:
      break;
  }
  Subset independent;
  double total = 0.0;
  for (int e : h.order) {
    if (!x.Contains(e)) continue;
    const Subset candidate = independent.With(e);
    if (m.IsIndependent(candidate)) {
      independent = candidate;
      total += h.weights[e];
    }
  }
  return total;
}

double EvaluateQuadratic(const QuadraticMNat& h, Subset x) {
  double total = 0.0;
  const std::vector<int> elements = x.Elements();
  for (size_t p = 0; p < elements.size(); ++p) {
    const int i = elements[p];
    total += 0.5 * h.a(i, i);
    for (size_t q = p + 1; q < elements.size(); ++q) {
      total += h.a(i, elements[q]);
    }
  }
  return total;
}

double EvaluateModularIndicator(const ModularPlusIndicator& h, Subset x) {
  if (x.Empty()) return 0.0;
  double total = h.c0;
  x.ForEach([&](int i) { total += h.ell[i]; });
  return total;
}

}  // namespace

std::string ValidateLaminarFamily(int n, const LaminarFamily& family,
                                  double tol) {
  const GroundSet ground(n);
  if (family.sets.size() != family.phi.size()) {
    return "laminar family has " + std::to_string(family.sets.size()) +
           " sets but " + std::to_string(family.phi.size()) + " tables";
  }
  for (size_t l = 0; l < family.sets.size(); ++l) {
    const Subset s = family.sets[l];
    if (s.Empty() || !ground.Contains(s)) {
      return "laminar set " + std::to_string(l) + " " + ToString(s) +
             " is empty or leaves the ground set";
    }
    const auto& phi = family.phi[l];
    if (static_cast<int>(phi.size()) != s.Size() + 1) {
      return "table " + std::to_string(l) + " needs " +
             std::to_string(s.Size() + 1) + " entries";
    }
    for (double v : phi) {
      if (!std::isfinite(v)) {
        return "table " + std::to_string(l) + " has a non-finite entry";
      }
    }
    for (size_t t = 1; t + 1 < phi.size(); ++t) {
      if (phi[t + 1] - phi[t] > phi[t] - phi[t - 1] + tol) {
        return "table " + std::to_string(l) + " is not concave at " +
               std::to_string(t);
      }
    }
    for (size_t m = 0; m < l; ++m) {
      const Subset other = family.sets[m];
      const Subset common = s & other;
      if (!common.Empty() && common != s && common != other) {
        return "sets " + ToString(other) + " and " + ToString(s) +
               " are neither nested nor disjoint";
      }
    }
  }
  return "";
}

MNatConcaveFn::MNatConcaveFn(int n, Variant variant)
    : n_(n),
      variant_(std::make_shared<const Variant>(std::move(variant))),
      calls_(std::make_shared<std::atomic<int64_t>>(0)) {}

MNatConcaveFn MNatConcaveFn::Laminar(int n, LaminarFamily family) {
  const std::string problem = ValidateLaminarFamily(n, family);
  if (!problem.empty()) throw PreconditionError(problem);
  for (auto& phi : family.phi) {
    const double phi0 = phi[0];
    for (double& v : phi) v -= phi0;
  }
  return MNatConcaveFn(n, LaminarConcave{std::move(family)});
}

MNatConcaveFn MNatConcaveFn::WeightedRank(Matroid matroid,
                                          std::vector<double> weights) {
  const int n = matroid.n();
  if (static_cast<int>(weights.size()) != n) {
    throw PreconditionError("weighted rank: " + std::to_string(weights.size()) +
                            " weights for n = " + std::to_string(n));
  }
  CheckWeights("weighted rank", weights);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[a] > weights[b]; });
  return MNatConcaveFn(n, WeightedMatroidRank{std::move(matroid),
                                              std::move(weights),
                                              std::move(order)});
}

MNatConcaveFn MNatConcaveFn::Quadratic(SymmetricMatrix a, double tol) {
  const int n = a.n();
  GroundSet ground(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(a(i, j))) {
        throw PreconditionError("quadratic: non-finite entry");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (a(i, j) > tol) {
        std::ostringstream msg;
        msg << "quadratic: A(" << i << "," << j << ") = " << a(i, j)
            << " is positive";
        throw PreconditionError(msg.str());
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (a(i, j) > std::max(a(i, k), a(j, k)) + tol) {
          std::ostringstream msg;
          msg << "quadratic: triple (" << i << "," << j << "," << k
              << ") violates A_ij <= max(A_ik, A_jk)";
          throw PreconditionError(msg.str());
        }
      }
    }
  }
  return MNatConcaveFn(n, QuadraticMNat{std::move(a)});
}

MNatConcaveFn MNatConcaveFn::ModularIndicator(std::vector<double> ell,
                                              double c0) {
  const int n = static_cast<int>(ell.size());
  GroundSet ground(n);
  CheckWeights("modular plus indicator", ell);
  if (!std::isfinite(c0) || c0 < 0.0) {
    throw PreconditionError("modular plus indicator: c0 must be >= 0");
  }
  return MNatConcaveFn(n, ModularPlusIndicator{std::move(ell), c0});
}

MNatConcaveFn MNatConcaveFn::Modular(std::vector<double> weights) {
  return ModularIndicator(std::move(weights), 0.0);
}

MNatConcaveFn MNatConcaveFn::Zero(int n) {
  GroundSet ground(n);
  return Modular(std::vector<double>(n, 0.0));
}

MNatConcaveFn MNatConcaveFn::ConcaveOfCardinality(int n,
                                                  std::vector<double> phi) {
  GroundSet ground(n);
  LaminarFamily family;
  family.sets.push_back(Subset::Full(n));
  family.phi.push_back(std::move(phi));
  return Laminar(n, std::move(family));
}

std::string_view MNatConcaveFn::KindName() const {
  return std::visit(Overloaded{
                        [](const LaminarConcave&) { return "laminar"; },
                        [](const WeightedMatroidRank&) {
                          return "weighted_rank";
                        },
                        [](const QuadraticMNat&) { return "quadratic"; },
                        [](const ModularPlusIndicator&) {
                          return "modular_indicator";
                        },
                    },
                    *variant_);
}

double MNatConcaveFn::Evaluate(Subset x) const {
  return std::visit(
      Overloaded{
          [x](const LaminarConcave& h) { return EvaluateLaminar(h, x); },
          [x](const WeightedMatroidRank& h) { return EvaluateRank(h, x); },
          [x](const QuadraticMNat& h) { return EvaluateQuadratic(h, x); },
          [x](const ModularPlusIndicator& h) {
            return EvaluateModularIndicator(h, x);
          },
      },
      *variant_);
}

double MNatConcaveFn::Value(Subset x) const {
  calls_->fetch_add(1, std::memory_order_relaxed);
  return Evaluate(x);
}

SetFunctionOracle MNatConcaveFn::AsOracle(std::string name) const {
  MNatConcaveFn copy(n_, *variant_);
  return SetFunctionOracle(
      n_, [copy](Subset x) { return copy.Evaluate(x); }, std::move(name));
}

MNatConcaveFn MNatConcaveFn::Scaled(double factor) const {
  if (!std::isfinite(factor) || factor < 0.0) {
    throw PreconditionError("MNatConcaveFn::Scaled: factor must be >= 0");
  }
  Variant scaled = *variant_;
  std::visit(Overloaded{
                 [&](LaminarConcave& h) {
                   for (auto& phi : h.family.phi) {
                     for (double& v : phi) v *= factor;
                   }
                 },
                 [&](WeightedMatroidRank& h) {
                   for (double& w : h.weights) w *= factor;
                 },
                 [&](QuadraticMNat& h) {
                   for (int i = 0; i < n_; ++i) {
                     for (int j = i; j < n_; ++j) {
                       h.a.Set(i, j, h.a(i, j) * factor);
                     }
                   }
                 },
                 [&](ModularPlusIndicator& h) {
                   for (double& v : h.ell) v *= factor;
                   h.c0 *= factor;
                 },
             },
             scaled);
  return MNatConcaveFn(n_, std::move(scaled));
}

}  // namespace hcurv
