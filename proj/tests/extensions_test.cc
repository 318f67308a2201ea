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

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "hcurv/extensions/concave_closure.h"
#include "hcurv/extensions/fractional_point.h"
#include "hcurv/extensions/linear_program.h"
#include "hcurv/extensions/multilinear.h"
#include "hcurv/mconcave/mnat_concave.h"
#include "hcurv/setfn/errors.h"
#include "hcurv/setfn/random.h"
#include "tests/testing/random_functions.h"

namespace hcurv {
namespace {

using testing::kAllMNatKinds;
using testing::MNatKindName;
using testing::RandomMNat;

SetFunctionOracle Sqrt(int n) {
  return CardinalityFunction(
      n, [](int t) { return std::sqrt(static_cast<double>(t)); }, "sqrt");
}

MNatConcaveFn SqrtH(int n) {
  std::vector<double> phi(n + 1);
  for (int t = 0; t <= n; ++t) phi[t] = std::sqrt(static_cast<double>(t));
  return MNatConcaveFn::ConcaveOfCardinality(n, phi);
}

// Independent oracle: the defining sum, term by term.
double DefiningSum(const SetFunctionOracle& f, const FractionalPoint& x) {
  double total = 0.0;
  for (uint64_t m = 0; m < (uint64_t{1} << f.n()); ++m) {
    double p = 1.0;
    for (int i = 0; i < f.n(); ++i) p *= ((m >> i) & 1) ? x[i] : 1.0 - x[i];
    total += p * f.Value(Subset::FromMask(m));
  }
  return total;
}

// A random point of the size-k hull, as a mix of a few random size-k sets.
FractionalPoint RandomHullPoint(Rng& rng, int n, int k) {
  const int parts = static_cast<int>(rng.UniformInt(1, 4));
  std::vector<double> x(n, 0.0);
  std::vector<double> weights(parts);
  double total = 0.0;
  for (double& w : weights) total += (w = rng.Uniform(0.05, 1.0));
  for (int p = 0; p < parts; ++p) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) {
      std::swap(perm[i], perm[rng.UniformInt(0, i)]);
    }
    for (int t = 0; t < k; ++t) x[perm[t]] += weights[p] / total;
  }
  for (double& v : x) v = std::min(v, 1.0);
  return FractionalPoint(x);
}

TEST(FractionalPointTest, ValidatesAndClamps) {
  EXPECT_THROW(FractionalPoint({0.5, 1.2}), PreconditionError);
  EXPECT_THROW(FractionalPoint({-0.1}), PreconditionError);
  FractionalPoint x({1.0 + 1e-12, 0.0, 0.5});
  EXPECT_EQ(x[0], 1.0);
  EXPECT_EQ(x.Ones(), Subset::Of({0}));
  EXPECT_EQ(x.Zeros(), Subset::Of({1}));
  EXPECT_DOUBLE_EQ(x.Sum(), 1.5);
}

TEST(ConvexCombinationTest, NormalizeMergesAndValidateChecks) {
  ConvexCombination c{1,
                      {{0.25, Subset::Of({1})},
                       {0.5, Subset::Of({0})},
                       {0.25, Subset::Of({1})}}};
  const auto merged = c.Normalized();
  ASSERT_EQ(merged.terms.size(), 2u);
  EXPECT_EQ(merged.terms[0].set, Subset::Of({0}));
  EXPECT_DOUBLE_EQ(merged.terms[1].weight, 0.5);
  const FractionalPoint x({0.5, 0.5});
  EXPECT_EQ(merged.Validate(&x), "");
  const FractionalPoint other({0.6, 0.4});
  EXPECT_NE(merged.Validate(&other), "");
  ConvexCombination mixed{1, {{0.5, Subset::Of({0})}, {0.5, Subset::Of({0, 1})}}};
  EXPECT_NE(mixed.Validate(), "");
}

TEST(MultilinearExactTest, Examples) {
  const FractionalPoint half({0.5, 0.5});
  EXPECT_DOUBLE_EQ(MultilinearExact(ModularFunction({1, 2}), half), 1.5);
  EXPECT_NEAR(MultilinearExact(Sqrt(2), half), 0.5 + 0.25 * std::sqrt(2.0),
              1e-15);
  EXPECT_NEAR(MultilinearExact(Sqrt(2), half), 0.85355, 1e-5);
}

TEST(MultilinearExactTest, AgreesOnVerticesAndWithDefiningSum) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(1, 7));
    const auto f = RandomMNat(rng, kAllMNatKinds[trial % 4], n).AsOracle();
    const Subset y = Subset::FromMask(rng.Bits() & ((uint64_t{1} << n) - 1));
    EXPECT_NEAR(MultilinearExact(f, FractionalPoint::Indicator(n, y)),
                f.Value(y), 1e-12);
    std::vector<double> x(n);
    for (double& v : x) v = rng.Uniform();
    EXPECT_NEAR(MultilinearExact(f, FractionalPoint(x)),
                DefiningSum(f, FractionalPoint(x)), 1e-9);
  }
}

TEST(MultilinearExactTest, RefusesAboveCap) {
  EXPECT_THROW(MultilinearExact(Sqrt(17), FractionalPoint::Zero(17)),
               CapExceededError);
}

TEST(MultilinearSampleTest, IntegralPointIsExact) {
  EstimatorConfig cfg{10, 3};
  EXPECT_DOUBLE_EQ(
      MultilinearSample(Sqrt(3), FractionalPoint({1, 0, 1}), cfg),
      std::sqrt(2.0));
}

TEST(MultilinearSampleTest, CloseToExactWithManySamples) {
  const FractionalPoint half({0.5, 0.5});
  EstimatorConfig cfg{100000, 7};
  EXPECT_NEAR(MultilinearSample(ModularFunction({1, 2}), half, cfg), 1.5,
              0.02);
  EXPECT_NEAR(MultilinearSample(Sqrt(2), half, cfg), 0.85355, 0.02);
}

TEST(MultilinearSampleTest, DeterministicPerSeed) {
  const FractionalPoint x({0.3, 0.6, 0.2});
  EXPECT_EQ(MultilinearSample(Sqrt(3), x, {500, 4}),
            MultilinearSample(Sqrt(3), x, {500, 4}));
}

TEST(EstimatorConfigTest, HoeffdingCount) {
  // ceil(ln(2 / 0.05) / (2 * 0.01)) = ceil(184.44) = 185.
  EXPECT_EQ(EstimatorConfig::Hoeffding(0.1, 0.05, 1.0, 0).sample_count, 185);
  EXPECT_EQ(EstimatorConfig::Hoeffding(0.1, 0.05, 2.0, 0).sample_count, 738);
  EXPECT_EQ(EstimatorConfig::GradientHoeffding(0.2, 0.1, 2, 0).sample_count,
            EstimatorConfig::Hoeffding(0.1, 0.05, 1.0, 0).sample_count);
  EXPECT_THROW(EstimatorConfig::Hoeffding(0.0, 0.1, 1.0, 0),
               PreconditionError);
}

TEST(MultilinearGradTest, Examples) {
  EstimatorConfig cfg;
  const auto modular =
      MultilinearGrad(ModularFunction({1, 2}), FractionalPoint({0.3, 0.9}), cfg);
  EXPECT_DOUBLE_EQ(modular[0], 1.0);
  EXPECT_DOUBLE_EQ(modular[1], 2.0);
  const auto at_zero = MultilinearGrad(Sqrt(2), FractionalPoint::Zero(2), cfg);
  EXPECT_DOUBLE_EQ(at_zero[0], 1.0);
  EXPECT_DOUBLE_EQ(at_zero[1], 1.0);
  const auto at_one = MultilinearGrad(Sqrt(2), FractionalPoint({1, 1}), cfg);
  EXPECT_NEAR(at_one[0], std::sqrt(2.0) - 1.0, 1e-15);
  EXPECT_NEAR(at_one[1], std::sqrt(2.0) - 1.0, 1e-15);
}

TEST(MultilinearGradTest, MatchesCentralDifferences) {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(1, 8));
    const auto f = RandomMNat(rng, kAllMNatKinds[trial % 4], n).AsOracle();
    const auto table = ValueTable::Build(f);
    std::vector<double> x(n);
    for (double& v : x) v = rng.Uniform(0.1, 0.9);
    const FractionalPoint point(x);
    const auto grad = MultilinearGradExact(table, point);
    for (int i = 0; i < n; ++i) {
      const double h = 0.05;
      const double central = (MultilinearExact(table, point.With(i, x[i] + h)) -
                              MultilinearExact(table, point.With(i, x[i] - h))) /
                             (2 * h);
      EXPECT_NEAR(grad[i], central, 1e-6);
      const double two_point = MultilinearExact(table, point.With(i, 1.0)) -
                               MultilinearExact(table, point.With(i, 0.0));
      EXPECT_NEAR(grad[i], two_point, 1e-9);
    }
  }
}

TEST(MultilinearGradTest, SampledWithinContract) {
  const auto f = Sqrt(4);
  const FractionalPoint x({0.2, 0.5, 0.7, 0.1});
  const auto exact = MultilinearGradExact(ValueTable::Build(f), x);
  const auto cfg = EstimatorConfig::GradientHoeffding(0.1, 0.01, 4, 77);
  const auto sampled = MultilinearGradSample(f, x, cfg);
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) worst += std::abs(sampled[i] - exact[i]);
  // M = 1; the all-ones v is the worst case of |v^T error|.
  EXPECT_LE(worst, 0.1);
}

TEST(LinearProgramTest, SmallMaximization) {
  // max 3a + 2b  s.t.  a + b <= 4, a + 3b <= 6, a <= 3.
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {3, 2};
  lp.AddRow({1, 1}, ConstraintSense::kLessEqual, 4);
  lp.AddRow({1, 3}, ConstraintSense::kLessEqual, 6);
  lp.AddRow({1, 0}, ConstraintSense::kLessEqual, 3);
  const auto sol = SolveLinearProgram(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_NEAR(sol.objective, 11.0, 1e-12);
  EXPECT_NEAR(sol.x[0], 3.0, 1e-12);
  EXPECT_NEAR(sol.x[1], 1.0, 1e-12);
}

TEST(LinearProgramTest, EqualityGreaterAndNegativeRhs) {
  // max -a - 2b  s.t.  a + b = 2, b - a >= -1.
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {-1, -2};
  lp.AddRow({1, 1}, ConstraintSense::kEqual, 2);
  lp.AddRow({-1, 1}, ConstraintSense::kGreaterEqual, -1);
  const auto sol = SolveLinearProgram(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_NEAR(sol.x[0], 1.5, 1e-12);
  EXPECT_NEAR(sol.x[1], 0.5, 1e-12);
}

TEST(LinearProgramTest, InfeasibleUnboundedAndRedundant) {
  LinearProgram infeasible;
  infeasible.num_vars = 1;
  infeasible.objective = {1};
  infeasible.AddRow({1}, ConstraintSense::kGreaterEqual, 2);
  infeasible.AddRow({1}, ConstraintSense::kLessEqual, 1);
  EXPECT_EQ(SolveLinearProgram(infeasible).status, LpStatus::kInfeasible);

  LinearProgram unbounded;
  unbounded.num_vars = 2;
  unbounded.objective = {1, 0};
  unbounded.AddRow({0, 1}, ConstraintSense::kLessEqual, 1);
  EXPECT_EQ(SolveLinearProgram(unbounded).status, LpStatus::kUnbounded);

  LinearProgram redundant;
  redundant.num_vars = 2;
  redundant.objective = {1, 2};
  redundant.AddRow({1, 1}, ConstraintSense::kEqual, 1);
  redundant.AddRow({2, 2}, ConstraintSense::kEqual, 2);
  const auto sol = SolveLinearProgram(redundant);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_NEAR(sol.objective, 2.0, 1e-12);
}

TEST(LinearProgramTest, DegenerateAssignmentDoesNotCycle) {
  // A 4x4 assignment polytope is highly degenerate.
  const int n = 4;
  LinearProgram lp;
  lp.num_vars = n * n;
  Rng rng(4);
  for (int v = 0; v < n * n; ++v) {
    lp.objective.push_back(static_cast<double>(rng.UniformInt(0, 3)));
  }
  for (int i = 0; i < n; ++i) {
    std::vector<double> row(n * n, 0.0);
    std::vector<double> col(n * n, 0.0);
    for (int j = 0; j < n; ++j) {
      row[i * n + j] = 1.0;
      col[j * n + i] = 1.0;
    }
    lp.AddRow(row, ConstraintSense::kEqual, 1.0);
    lp.AddRow(col, ConstraintSense::kEqual, 1.0);
  }
  const auto sol = SolveLinearProgram(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  double best = 0.0;
  std::vector<int> perm{0, 1, 2, 3};
  do {
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += lp.objective[i * n + perm[i]];
    best = std::max(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_NEAR(sol.objective, best, 1e-9);
}

TEST(ConcaveClosureTest, Examples) {
  const FractionalPoint half({0.5, 0.5});
  const auto modular = ConcaveClosure(MNatConcaveFn::Modular({1, 2}), half, 1);
  EXPECT_NEAR(modular.value, 1.5, 1e-12);
  ASSERT_EQ(modular.witness.terms.size(), 2u);
  EXPECT_NEAR(modular.witness.terms[0].weight, 0.5, 1e-12);

  const auto sqrt = ConcaveClosure(SqrtH(2), half, 1);
  EXPECT_NEAR(sqrt.value, 1.0, 1e-12);
  EXPECT_EQ(sqrt.witness.Validate(&half), "");

  const Subset y = Subset::Of({0, 2});
  const auto vertex =
      ConcaveClosure(SqrtH(3), FractionalPoint::Indicator(3, y), 2);
  EXPECT_NEAR(vertex.value, std::sqrt(2.0), 1e-15);
  ASSERT_EQ(vertex.witness.terms.size(), 1u);
  EXPECT_EQ(vertex.witness.terms[0].set, y);
}

TEST(ConcaveClosureTest, RejectsInfeasibleInputAndCap) {
  EXPECT_THROW(ConcaveClosure(SqrtH(2), FractionalPoint({0.5, 0.2}), 1),
               PreconditionError);
  EXPECT_THROW(ConcaveClosure(SqrtH(3), FractionalPoint({1, 1, 0}), 1),
               PreconditionError);
  EXPECT_THROW(
      ConcaveClosure(SqrtH(17), FractionalPoint::Indicator(17, Subset::Of({0})),
                     1),
      CapExceededError);
}

TEST(ConcaveClosureTest, SpecialFormExamples) {
  const std::vector<double> ell{1, 0};
  EXPECT_DOUBLE_EQ(
      ClosureSpecialModularIndicator(ell, 1, FractionalPoint({1, 0}), 1), 2.0);
  EXPECT_DOUBLE_EQ(
      ClosureSpecialModularIndicator(ell, 1, FractionalPoint({0.5, 0.5}), 1),
      1.5);
  const std::vector<double> zero{0, 0, 0};
  EXPECT_DOUBLE_EQ(ClosureSpecialModularIndicator(
                       zero, 5, FractionalPoint({0.5, 0.5, 1.0}), 2),
                   5.0);
  EXPECT_DOUBLE_EQ(
      ClosureSpecialModularIndicator(zero, 5, FractionalPoint::Zero(3), 0),
      0.0);
}

TEST(ConcaveClosureTest, LpMatchesSpecialForm) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(2, 9));
    const int k = static_cast<int>(rng.UniformInt(1, n));
    const auto ell = testing::RandomIntWeights(rng, n, 0, 9);
    const double c0 = static_cast<double>(rng.UniformInt(0, 9));
    const auto x = RandomHullPoint(rng, n, k);
    const auto h = MNatConcaveFn::ModularIndicator(ell, c0);
    EXPECT_NEAR(ConcaveClosure(h, x, k).value,
                ClosureSpecialModularIndicator(ell, c0, x, k), 1e-9);
  }
}

TEST(ConcaveClosureTest, InvariantsOnRandomPoints) {
  Rng rng(8);
  for (auto kind : kAllMNatKinds) {
    for (int trial = 0; trial < 10; ++trial) {
      const int n = static_cast<int>(rng.UniformInt(2, 7));
      const int k = static_cast<int>(rng.UniformInt(1, n));
      const auto h = RandomMNat(rng, kind, n);
      const auto x = RandomHullPoint(rng, n, k);
      const auto y = RandomHullPoint(rng, n, k);
      std::vector<double> mid(n);
      for (int i = 0; i < n; ++i) mid[i] = 0.5 * (x[i] + y[i]);
      const auto cx = ConcaveClosure(h, x, k);
      const auto cy = ConcaveClosure(h, y, k);
      const auto cm = ConcaveClosure(h, FractionalPoint(mid), k);
      EXPECT_GE(cm.value, 0.5 * (cx.value + cy.value) - 1e-9)
          << MNatKindName(kind);
      EXPECT_GE(cx.value, MultilinearExact(h.AsOracle(), x) - 1e-9)
          << MNatKindName(kind);
      EXPECT_EQ(cx.witness.Validate(&x), "");
      EXPECT_LE(static_cast<int>(cx.witness.terms.size()), n + 1);
      EXPECT_NEAR(cx.witness.Evaluate([&](Subset s) { return h.Value(s); }),
                  cx.value, 1e-7);
    }
  }
}

}  // namespace
}  // namespace hcurv
