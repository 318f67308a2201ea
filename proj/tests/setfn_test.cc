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
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "gtest/gtest.h"
#include "hcurv/setfn/brute_force.h"
#include "hcurv/setfn/curvature.h"
#include "hcurv/setfn/errors.h"
#include "hcurv/setfn/random.h"
#include "hcurv/setfn/set_function.h"
#include "hcurv/setfn/subset.h"
#include "hcurv/setfn/symmetric_matrix.h"

namespace hcurv {
namespace {

SetFunctionOracle Sqrt(int n) {
  return CardinalityFunction(
      n, [](int t) { return std::sqrt(static_cast<double>(t)); }, "sqrt");
}

// Coverage over sets Gamma(v), written out directly.
SetFunctionOracle Coverage(int n, std::vector<std::vector<int>> gamma) {
  return SetFunctionOracle(n, [gamma](Subset x) {
    double covered = 0.0;
    for (const auto& g : gamma) {
      for (int e : g) {
        if (x.Contains(e)) {
          covered += 1.0;
          break;
        }
      }
    }
    return covered;
  });
}

SetFunctionOracle FacilityLocation(std::vector<std::vector<double>> w) {
  const int n = static_cast<int>(w[0].size());
  return SetFunctionOracle(n, [w](Subset x) {
    double total = 0.0;
    for (const auto& row : w) {
      double best = 0.0;
      x.ForEach([&](int j) { best = std::max(best, row[j]); });
      total += best;
    }
    return total;
  });
}

TEST(SubsetTest, BasicOperations) {
  const Subset s = Subset::Of({0, 2, 5});
  EXPECT_EQ(s.Size(), 3);
  EXPECT_TRUE(s.Contains(2));
  EXPECT_FALSE(s.Contains(1));
  EXPECT_EQ(s.Lowest(), 0);
  EXPECT_EQ(s.Without(0).Lowest(), 2);
  EXPECT_EQ(ToString(s), "{0,2,5}");
  EXPECT_EQ(ToString(Subset()), "{}");
  EXPECT_EQ(s - Subset::Of({2}), Subset::Of({0, 5}));
  EXPECT_EQ(s.Elements(), (std::vector<int>{0, 2, 5}));
  EXPECT_TRUE(Subset::Of({2}).IsSubsetOf(s));
  EXPECT_EQ(Subset::Full(64).Size(), 64);
}

TEST(SubsetTest, LexOrderMatchesSortedElementLists) {
  const int n = 5;
  std::vector<Subset> all;
  for (uint64_t m = 0; m < (1u << n); ++m) all.push_back(Subset::FromMask(m));
  for (Subset a : all) {
    for (Subset b : all) {
      EXPECT_EQ(LexLess(a, b), a.Elements() < b.Elements())
          << ToString(a) << " vs " << ToString(b);
    }
  }
}

TEST(SubsetTest, EnumerationIsLexicographicAndComplete) {
  std::vector<Subset> seen;
  ForEachSubsetLex(5, 3, [&](Subset s) {
    seen.push_back(s);
    return true;
  });
  size_t expected = 0;
  for (int k = 0; k <= 3; ++k) expected += Binomial(5, k);
  ASSERT_EQ(seen.size(), expected);
  for (size_t i = 1; i < seen.size(); ++i) {
    EXPECT_TRUE(LexLess(seen[i - 1], seen[i]));
  }
  const auto exact = SubsetsOfSize(6, 2);
  ASSERT_EQ(exact.size(), 15u);
  EXPECT_EQ(exact.front(), Subset::Of({0, 1}));
  EXPECT_EQ(exact.back(), Subset::Of({4, 5}));
}

TEST(SubsetTest, BinomialSaturatesInsteadOfOverflowing) {
  EXPECT_EQ(Binomial(10, 3), 120u);
  EXPECT_EQ(Binomial(4, 5), 0u);
  EXPECT_EQ(Binomial(64, 32), 1832624140942590534u);
}

TEST(GroundSetTest, RejectsBadSizes) {
  EXPECT_THROW(GroundSet(0), PreconditionError);
  EXPECT_THROW(GroundSet(65), PreconditionError);
  EXPECT_EQ(GroundSet(3).Full(), Subset::Of({0, 1, 2}));
}

TEST(SetFunctionOracleTest, CountsEveryCall) {
  auto f = ModularFunction({1, 2, 3});
  EXPECT_EQ(f.calls(), 0);
  f.Value(Subset::Of({0}));
  f(Subset::Of({1, 2}));
  EXPECT_EQ(f.calls(), 2);
  auto copy = f;
  copy.Value(Subset());
  EXPECT_EQ(f.calls(), 3);
  auto fresh = f.WithFreshCounter("fresh");
  fresh.Value(Subset());
  EXPECT_EQ(fresh.calls(), 1);
  EXPECT_EQ(f.calls(), 3);
  f.ResetCalls();
  EXPECT_EQ(f.calls(), 0);
}

TEST(SetFunctionOracleTest, CounterIsExactUnderConcurrentUse) {
  auto f = Sqrt(6);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 1000; ++i) f.Value(Subset::FromMask(i % 64));
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(f.calls(), 4000);
}

TEST(SetFunctionOracleTest, NormalizationShiftsEmptyValueToZero) {
  SetFunctionOracle f(2, [](Subset s) { return 3.0 + s.Size(); });
  EXPECT_FALSE(f.normalized());
  auto g = f.Normalized();
  EXPECT_TRUE(g.normalized());
  EXPECT_DOUBLE_EQ(g.Value(Subset()), 0.0);
  EXPECT_DOUBLE_EQ(g.Value(Subset::Of({0, 1})), 2.0);
}

TEST(MarginalTest, CardinalityFunction) {
  auto f = CardinalityFunction(
      3, [](int t) { return static_cast<double>(t); }, "card");
  EXPECT_DOUBLE_EQ(Marginal(f, 0, Subset::Of({1})), 1.0);
}

TEST(MarginalTest, SqrtLastMarginal) {
  auto f = Sqrt(4);
  EXPECT_NEAR(Marginal(f, 0, Subset::Of({1, 2, 3})), 2.0 - std::sqrt(3.0),
              1e-12);
  EXPECT_NEAR(LastMarginal(f, 0), 0.26795, 1e-5);
}

TEST(MarginalTest, CoverageMarginalCanBeZero) {
  auto f = Coverage(2, {{0, 1}});
  EXPECT_DOUBLE_EQ(Marginal(f, 0, Subset::Of({1})), 0.0);
}

TEST(MarginalTest, UsesTwoCallsOrOneForNormalizedEmptyBase) {
  auto f = Sqrt(3);
  f.ResetCalls();
  Marginal(f, 0, Subset::Of({1}));
  EXPECT_EQ(f.calls(), 2);
  f.ResetCalls();
  Marginal(f, 0, Subset());
  EXPECT_EQ(f.calls(), 1);
}

TEST(MarginalTest, RejectsElementAlreadyInSet) {
  auto f = Sqrt(3);
  EXPECT_THROW(Marginal(f, 1, Subset::Of({1})), PreconditionError);
  EXPECT_THROW(Marginal(f, 7, Subset()), PreconditionError);
}

TEST(CurvatureTest, ModularIsZero) {
  auto report = TotalCurvature(ModularFunction({1, 2, 3}));
  EXPECT_DOUBLE_EQ(report.c, 0.0);
}

TEST(CurvatureTest, SqrtOnFourElements) {
  auto f = Sqrt(4);
  auto report = TotalCurvature(f);
  EXPECT_NEAR(report.c, 1.0 - (2.0 - std::sqrt(3.0)), 1e-12);
  EXPECT_NEAR(report.c, 0.73205, 1e-5);
  EXPECT_EQ(report.argmin_element, 0);
  EXPECT_LE(f.calls(), 2 * 4 + 2);
}

TEST(CurvatureTest, CoverageWithSharedVertexIsOne) {
  auto report = TotalCurvature(Coverage(2, {{0, 1}}));
  EXPECT_DOUBLE_EQ(report.c, 1.0);
}

TEST(CurvatureTest, ZeroSingletonsAreFlaggedAndSkipped) {
  auto f = ModularFunction({0, 2, 3});
  auto report = TotalCurvature(f);
  EXPECT_EQ(report.zero_singletons, std::vector<int>{0});
  EXPECT_FALSE(report.per_element_ratios[0].has_value());
  EXPECT_DOUBLE_EQ(report.c, 0.0);
  EXPECT_THROW(TotalCurvature(ZeroFunction(3)), PreconditionError);
}

TEST(CurvatureTest, ExactlyOneWhenSomeLastMarginalVanishes) {
  // f(2 | E - 2) = 0 while f(2) = 2.
  auto f = Coverage(3, {{0}, {1, 2}, {2, 1}});
  EXPECT_DOUBLE_EQ(TotalCurvature(f).c, 1.0);
}

TEST(CurvatureTest, CallBudgetOnRandomFacilityInstances) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(1, 8));
    std::vector<std::vector<double>> w(3, std::vector<double>(n));
    for (auto& row : w) {
      for (double& v : row) v = static_cast<double>(rng.UniformInt(1, 9));
    }
    auto f = FacilityLocation(w);
    TotalCurvature(f);
    EXPECT_LE(f.calls(), 2 * n + 2);
  }
}

TEST(BruteForceMaxTest, SqrtTieBreaksLexicographically) {
  auto best = BruteForceMax(Sqrt(4), 2);
  EXPECT_EQ(best.set, Subset::Of({0, 1}));
  EXPECT_NEAR(best.value, std::sqrt(2.0), 1e-12);
}

TEST(BruteForceMaxTest, ModularTopWeights) {
  auto best = BruteForceMax(ModularFunction({3, 1, 2}), 2);
  EXPECT_EQ(best.set, Subset::Of({0, 2}));
  EXPECT_DOUBLE_EQ(best.value, 5.0);
}

TEST(BruteForceMaxTest, FacilitySingleCustomer) {
  auto best = BruteForceMax(FacilityLocation({{2, 1}}), 1);
  EXPECT_EQ(best.set, Subset::Of({0}));
  EXPECT_DOUBLE_EQ(best.value, 2.0);
}

TEST(BruteForceMaxTest, RefusesAboveCapAndBadCardinality) {
  EXPECT_THROW(BruteForceMax(Sqrt(21), 2), CapExceededError);
  EXPECT_NO_THROW(BruteForceMax(Sqrt(5), 2, 5));
  EXPECT_THROW(BruteForceMax(Sqrt(6), 2, 5), CapExceededError);
  EXPECT_THROW(BruteForceMax(Sqrt(4), 5), PreconditionError);
}

TEST(BruteForceMaxTest, DominatesEveryCandidate) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(2, 8));
    const int k = static_cast<int>(rng.UniformInt(0, n));
    std::vector<std::vector<double>> w(2, std::vector<double>(n));
    for (auto& row : w) {
      for (double& v : row) v = static_cast<double>(rng.UniformInt(0, 9));
    }
    auto f = FacilityLocation(w);
    const auto best = BruteForceMax(f, k);
    for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
      const Subset s = Subset::FromMask(m);
      if (s.Size() > k) continue;
      EXPECT_GE(best.value + 1e-12, f.Value(s));
    }
    const auto exact = BruteForceMaxExact(f, k);
    EXPECT_EQ(exact.set.Size(), k);
    EXPECT_NEAR(exact.value, best.value, 1e-12);  // monotone
  }
}

TEST(VerifyMonotoneSubmodularTest, SqrtPasses) {
  auto check = VerifyMonotoneSubmodular(Sqrt(5));
  EXPECT_TRUE(check.ok);
  EXPECT_FALSE(check.witness.has_value());
}

TEST(VerifyMonotoneSubmodularTest, SquareIsSupermodular) {
  auto f = CardinalityFunction(
      4, [](int t) { return static_cast<double>(t * t); }, "square");
  auto check = VerifyMonotoneSubmodular(f);
  ASSERT_FALSE(check.ok);
  ASSERT_TRUE(check.witness.has_value());
  EXPECT_EQ(check.witness->kind,
            MonotoneSubmodularWitness::Kind::kSubmodularity);
  EXPECT_EQ(check.witness->x, Subset());
  EXPECT_EQ(check.witness->i, 0);
  EXPECT_EQ(check.witness->j, 1);
  EXPECT_DOUBLE_EQ(check.witness->value, 2.0);
}

TEST(VerifyMonotoneSubmodularTest, DecreasingFunctionFailsMonotonicity) {
  auto f = ModularFunction({1, -1});
  auto check = VerifyMonotoneSubmodular(f);
  ASSERT_FALSE(check.ok);
  EXPECT_EQ(check.witness->kind, MonotoneSubmodularWitness::Kind::kMonotonicity);
  EXPECT_EQ(check.witness->i, 1);
  EXPECT_TRUE(VerifyMonotoneSubmodular(f, 12, false).ok);
}

TEST(VerifyMonotoneSubmodularTest, RandomCoverageInstancesPass) {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(1, 10));
    std::vector<std::vector<int>> gamma(rng.UniformInt(1, 8));
    for (auto& g : gamma) {
      for (int e = 0; e < n; ++e) {
        if (rng.Bernoulli(0.3)) g.push_back(e);
      }
      if (g.empty()) g.push_back(static_cast<int>(rng.UniformInt(0, n - 1)));
    }
    EXPECT_TRUE(VerifyMonotoneSubmodular(Coverage(n, gamma)).ok);
  }
}

TEST(VerifyMonotoneSubmodularTest, RefusesAboveCap) {
  EXPECT_THROW(VerifyMonotoneSubmodular(Sqrt(13)), CapExceededError);
}

TEST(ValueTableTest, MatchesOracleAndRejectsWrongSizes) {
  auto f = Sqrt(4);
  auto table = ValueTable::Build(f);
  EXPECT_EQ(f.calls(), 16);
  EXPECT_DOUBLE_EQ(table[Subset::Of({0, 3})], std::sqrt(2.0));
  auto oracle = table.AsOracle();
  EXPECT_DOUBLE_EQ(oracle.Value(Subset::Full(4)), 2.0);
  EXPECT_THROW(ValueTable::FromValues(2, {0, 1, 2}), PreconditionError);
}

TEST(SymmetricMatrixTest, FromRowsValidatesShapeAndSymmetry) {
  auto a = SymmetricMatrix::FromRows({{1, 2}, {2, 3}});
  EXPECT_DOUBLE_EQ(a(0, 1), 2.0);
  EXPECT_THROW(SymmetricMatrix::FromRows({{1, 2}, {1, 3}}), PreconditionError);
  EXPECT_THROW(SymmetricMatrix::FromRows({{1, 2}}), PreconditionError);
  a.Set(1, 0, -4);
  EXPECT_DOUBLE_EQ(a(0, 1), -4.0);
}

TEST(RngTest, DeterministicAndInRange) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.UniformInt(-3, 5);
    EXPECT_EQ(x, b.UniformInt(-3, 5));
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 5);
    const double u = a.Uniform();
    EXPECT_EQ(u, b.Uniform());
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_NE(DeriveSeed(1, 0), DeriveSeed(1, 1));
  EXPECT_NE(DeriveSeed(1, 0), DeriveSeed(2, 0));
}

}  // namespace
}  // namespace hcurv
