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

#include "hcurv/instances/wrs.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "hcurv/mconcave/mnat_concave.h"
#include "hcurv/setfn/errors.h"

namespace hcurv {
namespace {

SetFunctionOracle RankSum(std::vector<Matroid> matroids,
                          std::vector<std::vector<double>> weights,
                          int n, std::string name) {
  return SetFunctionOracle(
      n,
      [matroids = std::move(matroids), weights = std::move(weights)](
          Subset x) {
        double total = 0.0;
        for (size_t i = 0; i < matroids.size(); ++i) {
          total += MaxWeightIndependent(matroids[i], weights[i], x);
        }
        return total;
      },
      std::move(name));
}

bool Loopless(const Matroid& m) {
  for (int e = 0; e < m.n(); ++e) {
    if (m.Rank(Subset().With(e)) == 0) return false;
  }
  return true;
}

bool ColoopFree(const Matroid& m) {
  const Subset full = Subset::Full(m.n());
  const int top = m.Rank(full);
  for (int e = 0; e < m.n(); ++e) {
    if (m.Rank(full.Without(e)) < top) return false;
  }
  return true;
}

// Blocks (with capacities) that express r_M as a laminar sum of truncated
// cardinalities; empty for custom matroids.
std::vector<std::pair<Subset, int>> RankBlocks(const Matroid& m) {
  std::vector<std::pair<Subset, int>> out;
  switch (m.kind()) {
    case Matroid::Kind::kUniform:
      out.emplace_back(Subset::Full(m.n()), m.uniform_rank());
      break;
    case Matroid::Kind::kPartition:
      for (size_t b = 0; b < m.blocks().size(); ++b) {
        if (m.capacities()[b] > 0 && m.blocks()[b].Size() > 0) {
          out.emplace_back(m.blocks()[b], m.capacities()[b]);
        }
      }
      break;
    case Matroid::Kind::kCustom:
      break;
  }
  return out;
}

bool Compatible(Subset a, Subset b) {
  return (a & b).Size() == 0 || a.IsSubsetOf(b) || b.IsSubsetOf(a);
}

double MinWeight(const std::vector<double>& w) {
  return *std::min_element(w.begin(), w.end());
}

}  // namespace

std::vector<double> WeightedRankSumInstance::ScaledWeights(int i) const {
  std::vector<double> w = weights[i];
  for (double& v : w) v *= Coefficient(i);
  return w;
}

void ValidateWrs(const WeightedRankSumInstance& inst) {
  GroundSet ground(inst.n);
  if (inst.matroids.empty()) throw PreconditionError("wrs: no matroids");
  if (inst.weights.size() != inst.matroids.size()) {
    throw PreconditionError("wrs: one weight vector per matroid is required");
  }
  if (!inst.coefficients.empty() &&
      inst.coefficients.size() != inst.matroids.size()) {
    throw PreconditionError("wrs: one coefficient per matroid is required");
  }
  for (size_t i = 0; i < inst.matroids.size(); ++i) {
    const std::string tag = "wrs: matroid " + std::to_string(i);
    if (inst.matroids[i].n() != inst.n) {
      throw PreconditionError(tag + " has the wrong ground set");
    }
    if (inst.matroids[i].FullRank() == 0) {
      throw PreconditionError(tag + " has rank 0");
    }
    if (static_cast<int>(inst.weights[i].size()) != inst.n) {
      throw PreconditionError(tag + " has the wrong number of weights");
    }
    for (double v : inst.weights[i]) {
      if (!std::isfinite(v) || v < 0.0) {
        throw PreconditionError(tag + ": weights must be finite and >= 0");
      }
    }
    const double a = inst.Coefficient(static_cast<int>(i));
    if (!std::isfinite(a) || a <= 0.0) {
      throw PreconditionError(tag + ": coefficient must be positive");
    }
  }
}

SetFunctionOracle WrsFunction(const WeightedRankSumInstance& inst) {
  ValidateWrs(inst);
  std::vector<std::vector<double>> w;
  for (size_t i = 0; i < inst.matroids.size(); ++i) {
    w.push_back(inst.ScaledWeights(static_cast<int>(i)));
  }
  return RankSum(inst.matroids, std::move(w), inst.n, "wrs");
}

double WrsBoundOffset(const WeightedRankSumInstance& inst) {
  ValidateWrs(inst);
  const Subset full = Subset::Full(inst.n);
  double lo = 0.0;
  double hi = 0.0;
  for (size_t i = 0; i < inst.matroids.size(); ++i) {
    const std::vector<double> w = inst.ScaledWeights(static_cast<int>(i));
    lo += MinWeight(w);
    hi += MaxWeightIndependent(inst.matroids[i], w, full);
  }
  return hi > 0.0 ? lo / hi : 0.0;
}

Decomposition WrsDecompose(const WeightedRankSumInstance& inst, int cap) {
  ValidateWrs(inst);
  const int n = inst.n;
  const size_t count = inst.matroids.size();
  std::vector<std::vector<double>> reduced(count);
  std::vector<double> w_min(count);
  for (size_t i = 0; i < count; ++i) {
    reduced[i] = inst.ScaledWeights(static_cast<int>(i));
    w_min[i] = MinWeight(reduced[i]);
    for (double& v : reduced[i]) v -= w_min[i];
  }
  const SetFunctionOracle f_reduced =
      RankSum(inst.matroids, reduced, n, "f_reduced");
  const Subset full = Subset::Full(n);
  const double top = f_reduced.Value(full);
  std::vector<double> ell(n);
  for (int j = 0; j < n; ++j) {
    ell[j] = std::max(0.0, top - f_reduced.Value(full.Without(j)));
  }

  bool all_rank_one = true;
  for (const Matroid& m : inst.matroids) {
    all_rank_one = all_rank_one && m.FullRank() == 1 && Loopless(m);
  }

  bool absorbed_all = true;
  MNatConcaveFn h = MNatConcaveFn::Zero(n);
  if (all_rank_one) {
    double c0 = 0.0;
    for (double v : w_min) c0 += v;
    h = MNatConcaveFn::ModularIndicator(ell, c0);
  } else {
    // phi tables keyed by set, summed over duplicates.
    std::map<uint64_t, std::pair<Subset, std::vector<double>>> tables;
    auto add = [&](Subset s, auto&& phi_of) {
      auto& entry = tables[s.mask()];
      entry.first = s;
      entry.second.resize(s.Size() + 1, 0.0);
      for (int t = 0; t <= s.Size(); ++t) entry.second[t] += phi_of(t);
    };
    std::vector<Subset> chosen;
    for (size_t i = 0; i < count; ++i) {
      if (w_min[i] <= 0.0) continue;
      const auto blocks = RankBlocks(inst.matroids[i]);
      bool fits = !blocks.empty();
      for (const auto& [b, cap_b] : blocks) {
        for (const Subset s : chosen) fits = fits && Compatible(b, s);
      }
      if (!fits) {
        absorbed_all = false;
        continue;
      }
      for (const auto& [b, cap_b] : blocks) {
        chosen.push_back(b);
        const double w = w_min[i];
        const int cb = cap_b;
        add(b, [w, cb](int t) { return w * std::min(t, cb); });
      }
    }
    for (int j = 0; j < n; ++j) {
      if (ell[j] == 0.0) continue;
      const double l = ell[j];
      add(Subset().With(j), [l](int t) { return l * t; });
    }
    LaminarFamily family;
    for (auto& [mask, entry] : tables) {
      family.sets.push_back(entry.first);
      family.phi.push_back(std::move(entry.second));
    }
    h = MNatConcaveFn::Laminar(n, std::move(family));
  }

  const SetFunctionOracle f = WrsFunction(inst);
  SetFunctionOracle g = Difference(f, h.AsOracle(), "g");
  Decomposition dec{"wrs", f, std::move(g), h, {}, {}, {}, {}, {}, {}, {},
                    false};
  FillCurvatures(dec, cap);
  if (dec.curvature) {
    dec.gamma_bound = dec.curvature->c - WrsBoundOffset(inst);
    bool guaranteed = absorbed_all;
    for (const Matroid& m : inst.matroids) {
      guaranteed = guaranteed && Loopless(m) && ColoopFree(m);
    }
    dec.bound_guaranteed = guaranteed;
  }
  return dec;
}

Decomposition MixtureDecompose(const WeightedRankSumInstance& inst, int cap) {
  ValidateWrs(inst);
  const Subset full = Subset::Full(inst.n);
  int dominant = 0;
  double best = -1.0;
  for (size_t i = 0; i < inst.matroids.size(); ++i) {
    const double mass = MaxWeightIndependent(
        inst.matroids[i], inst.ScaledWeights(static_cast<int>(i)), full);
    if (mass > best) {
      best = mass;
      dominant = static_cast<int>(i);
    }
  }
  const std::vector<double> w = inst.ScaledWeights(dominant);
  const MNatConcaveFn h =
      MNatConcaveFn::WeightedRank(inst.matroids[dominant], w);
  const SetFunctionOracle f = WrsFunction(inst);
  SetFunctionOracle g = Difference(f, h.AsOracle(), "g");
  Decomposition dec{"mixture", f, std::move(g), h, {}, {}, {}, {}, {}, {},
                    {}, false};
  FillCurvatures(dec, cap);
  const double rest = dec.g.Value(full);
  const double floor = MinWeight(w);
  dec.gamma_bound = rest + floor > 0.0 ? rest / (rest + floor) : 1.0;
  dec.bound_guaranteed = Loopless(inst.matroids[dominant]);
  return dec;
}

}  // namespace hcurv
