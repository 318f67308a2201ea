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

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "hcurv/decompose/hessian.h"
#include "hcurv/instances/coverage.h"
#include "hcurv/instances/facility.h"
#include "hcurv/instances/generators.h"
#include "hcurv/instances/instance_io.h"
#include "hcurv/instances/wrs.h"
#include "hcurv/mconcave/exchange.h"
#include "hcurv/setfn/errors.h"
#include "hcurv/setfn/random.h"
#include "tests/testing/random_functions.h"

namespace hcurv {
namespace {

CoverageInstance Cov(int n, std::vector<Subset> gamma) {
  return CoverageInstance{n, std::move(gamma)};
}

void ExpectSameValues(const SetFunctionOracle& a, const SetFunctionOracle& b,
                      double tol = 1e-9) {
  ASSERT_EQ(a.n(), b.n());
  ForEachSubsetLex(a.n(), a.n(), [&](Subset x) {
    EXPECT_NEAR(a.Value(x), b.Value(x), tol) << ToString(x);
    return true;
  });
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

TEST(CoverageTest, FunctionExamples) {
  const auto one = CoverageFunction(Cov(2, {Subset::Of({0, 1})}));
  EXPECT_EQ(one.Value(Subset::Of({0})), 1.0);
  EXPECT_EQ(one.Value(Subset()), 0.0);
  const auto two =
      CoverageFunction(Cov(3, {Subset::Of({0, 1}), Subset::Of({1, 2})}));
  EXPECT_EQ(two.Value(Subset::Of({1})), 2.0);
  EXPECT_EQ(two.Value(Subset()), 0.0);
  EXPECT_THROW(ValidateCoverage(Cov(2, {Subset()})), PreconditionError);
  EXPECT_THROW(ValidateCoverage(Cov(2, {Subset::Of({2})})), PreconditionError);
}

TEST(CoverageTest, PairCountExamples) {
  const auto a = CoveragePairCounts(Cov(2, {Subset::Of({0, 1})}));
  EXPECT_EQ(a.h(0, 1), -1.0);
  EXPECT_EQ(a.source, HessianBounds::Source::kCoverageClosedForm);
  const auto b = CoveragePairCounts(Cov(3, {Subset::Of({0, 1, 2})}));
  EXPECT_EQ(b.h(0, 1), 0.0);
  EXPECT_EQ(b.h(1, 2), 0.0);
  const auto c =
      CoveragePairCounts(Cov(2, {Subset::Of({0, 1}), Subset::Of({0, 1})}));
  EXPECT_EQ(c.h(0, 1), -2.0);
}

TEST(CoverageTest, PairCountsMatchGenericBounds) {
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + t % 8;
    const auto inst = GenerateCoverage(n, 3 + t % 12, 0.3, 100 + t);
    const auto closed = CoveragePairCounts(inst);
    const auto generic = GenericHessianBounds(CoverageFunction(inst));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        EXPECT_EQ(closed.h(i, j), generic.h(i, j)) << t << " " << i << j;
      }
    }
  }
}

TEST(CoverageTest, DecompositionIsValid) {
  for (int t = 0; t < 20; ++t) {
    const auto inst = GenerateCoverage(3 + t % 6, 10, 0.3, 200 + t);
    const Decomposition dec = CoverageDecomposition(inst);
    EXPECT_TRUE(ValidateDecomposition(dec).ok) << t;
    ASSERT_TRUE(dec.gamma_h && dec.curvature);
    EXPECT_LE(*dec.gamma_h, dec.c() + 1e-9);
  }
}

TEST(FacilityTest, FunctionConvention) {
  const auto f = FacilityFunction({{{2, 1}, {0, 3}}});
  EXPECT_EQ(f.Value(Subset()), 0.0);
  EXPECT_EQ(f.Value(Subset::Of({0})), 2.0);
  EXPECT_EQ(f.Value(Subset::Of({1})), 4.0);
  EXPECT_EQ(f.Value(Subset::Of({0, 1})), 5.0);
  EXPECT_THROW(FacilityFunction({}), PreconditionError);
  EXPECT_THROW(FacilityFunction({{{1, -1}}}), PreconditionError);
  EXPECT_THROW(FacilityFunction({{{1, 1}, {1}}}), PreconditionError);
}

TEST(FacilityTest, DecomposeExamples) {
  const Decomposition a = FacilityDecompose({{{2, 1}}});
  const auto& mpi = std::get<ModularPlusIndicator>(a.h.variant());
  EXPECT_EQ(mpi.ell, (std::vector<double>{1, 0}));
  EXPECT_EQ(mpi.c0, 1.0);
  EXPECT_NEAR(*a.gamma_h, 0.0, 1e-12);
  EXPECT_NEAR(*a.gamma_bound, 0.5, 1e-12);
  EXPECT_TRUE(a.bound_guaranteed);
  EXPECT_TRUE(ValidateDecomposition(a).ok);

  const Decomposition b = FacilityDecompose({{{1, 1}}});
  const auto& flat = std::get<ModularPlusIndicator>(b.h.variant());
  EXPECT_EQ(flat.ell, (std::vector<double>{0, 0}));
  EXPECT_EQ(flat.c0, 1.0);
  EXPECT_NEAR(*b.gamma_h, 0.0, 1e-12);

  // Zero minima: h is the trivial modular part.
  const Decomposition c = FacilityDecompose({{{1, 0}, {0, 1}}});
  EXPECT_EQ(std::get<ModularPlusIndicator>(c.h.variant()).c0, 0.0);
  const Decomposition trivial = TrivialCurvatureDecomposition(c.f);
  ExpectSameValues(c.h.AsOracle(), trivial.h.AsOracle());
  EXPECT_NEAR(*c.gamma_h, *trivial.gamma_h, 1e-12);
}

TEST(FacilityTest, RandomDecompositionsMeetTheBound) {
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + t % 8;
    const auto inst = GenerateFacility(n, 1 + t % 5, t % 3, 10, 300 + t);
    const Decomposition dec = FacilityDecompose(inst);
    const auto check = ValidateDecomposition(dec);
    EXPECT_TRUE(check.ok) << t << ": " << check.failure;
    ASSERT_TRUE(dec.gamma_h && dec.gamma_bound);
    EXPECT_LE(*dec.gamma_h, *dec.gamma_bound + 1e-9) << t;
    // l(j) = f(j | E - j) of the unreduced function too.
    const auto& mpi = std::get<ModularPlusIndicator>(dec.h.variant());
    const Subset full = Subset::Full(n);
    for (int j = 0; j < n; ++j) {
      EXPECT_NEAR(mpi.ell[j], dec.f.Value(full) - dec.f.Value(full.Without(j)),
                  1e-9);
    }
  }
}

WeightedRankSumInstance FacilityAsWrs(const FacilityLocationInstance& fl) {
  WeightedRankSumInstance w;
  w.n = fl.n();
  for (const auto& row : fl.w) {
    w.matroids.push_back(Matroid::Uniform(w.n, 1));
    w.weights.push_back(row);
  }
  return w;
}

TEST(WrsTest, FacilityIsRankOneSum) {
  for (int t = 0; t < 20; ++t) {
    const auto fl = GenerateFacility(2 + t % 7, 1 + t % 4, 0, 10, 400 + t);
    const auto wrs = FacilityAsWrs(fl);
    ExpectSameValues(FacilityFunction(fl), WrsFunction(wrs));
    const Decomposition a = FacilityDecompose(fl);
    const Decomposition b = WrsDecompose(wrs);
    ExpectSameValues(a.h.AsOracle(), b.h.AsOracle());
    EXPECT_NEAR(*a.gamma_bound, *b.gamma_bound, 1e-12);
  }
}

TEST(WrsTest, Examples) {
  // Uniform of full rank: f is modular and h captures all of it.
  WeightedRankSumInstance modular{2, {Matroid::Uniform(2, 2)}, {{2, 1}}, {}};
  const Decomposition a = WrsDecompose(modular);
  EXPECT_NEAR(*a.gamma_h, 0.0, 1e-12);
  ExpectSameValues(a.h.AsOracle(), a.f);

  WeightedRankSumInstance indicator{2, {Matroid::Uniform(2, 1)}, {{1, 1}}, {}};
  const Decomposition b = WrsDecompose(indicator);
  EXPECT_NEAR(*b.gamma_h, 0.0, 1e-12);
  EXPECT_EQ(b.h.Value(Subset::Of({0, 1})), 1.0);
  EXPECT_EQ(b.h.Value(Subset::Of({1})), 1.0);

  WeightedRankSumInstance rank0{2, {Matroid::Uniform(2, 0)}, {{1, 1}}, {}};
  EXPECT_THROW(WrsDecompose(rank0), PreconditionError);
  WeightedRankSumInstance bad_coef{2, {Matroid::Uniform(2, 1)}, {{1, 1}}, {0}};
  EXPECT_THROW(WrsFunction(bad_coef), PreconditionError);
}

TEST(WrsTest, CoefficientsAreFolded) {
  WeightedRankSumInstance inst{
      3, {Matroid::Uniform(3, 1), Matroid::Uniform(3, 2)},
      {{1, 2, 3}, {3, 1, 1}}, {2.0, 0.5}};
  const auto f = WrsFunction(inst);
  EXPECT_DOUBLE_EQ(f.Value(Subset::Of({0, 1})), 2 * 2 + 0.5 * 4);
  EXPECT_DOUBLE_EQ(f.Value(Subset::Full(3)), 2 * 3 + 0.5 * 4);
}

TEST(WrsTest, GeneratedDecompositionsMeetTheBound) {
  for (int t = 0; t < 40; ++t) {
    WrsParams params;
    params.n = 2 + t % 9;
    params.partition_matroids = 1 + t % 3;
    params.with_uniform = t % 4 != 3;
    params.weight_lo = t % 2;
    const auto inst = GenerateWrs(params, 500 + t);
    const Decomposition dec = WrsDecompose(inst);
    const auto check = ValidateDecomposition(dec);
    EXPECT_TRUE(check.ok) << t << ": " << check.failure;
    ASSERT_TRUE(dec.gamma_h && dec.gamma_bound);
    EXPECT_TRUE(dec.bound_guaranteed) << t;
    EXPECT_LE(*dec.gamma_h, *dec.gamma_bound + 1e-9) << t;
  }
}

TEST(WrsTest, ArbitraryMatroidsStillDecompose) {
  Rng rng(77);
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + t % 6;
    WeightedRankSumInstance inst;
    inst.n = n;
    if (t % 3 == 0) {
      inst.matroids.push_back(Matroid::FromRankOracle(
          n, [](Subset x) { return std::min(x.Size(), 2); }, "truncated"));
      inst.weights.push_back(testing::RandomIntWeights(rng, n, 0, 6));
    }
    while (inst.matroids.size() < 3) {
      Matroid m = testing::RandomMatroid(rng, n);
      if (m.FullRank() == 0) continue;
      inst.matroids.push_back(std::move(m));
      inst.weights.push_back(testing::RandomIntWeights(rng, n, 0, 6));
    }
    const Decomposition dec = WrsDecompose(inst);
    const auto check = ValidateDecomposition(dec);
    EXPECT_TRUE(check.ok) << t << ": " << check.failure;
    if (dec.bound_guaranteed) {
      EXPECT_LE(*dec.gamma_h, *dec.gamma_bound + 1e-9) << t;
    }
  }
}

TEST(WrsTest, MixtureWithDominantCoefficient) {
  Rng rng(91);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + t % 5;
    WeightedRankSumInstance inst;
    inst.n = n;
    inst.matroids = {Matroid::Uniform(n, 1 + t % n), Matroid::Uniform(n, 1)};
    inst.weights = {testing::RandomIntWeights(rng, n, 1, 5),
                    testing::RandomIntWeights(rng, n, 0, 5)};
    inst.coefficients = {10.0, 1.0};
    const Decomposition dec = MixtureDecompose(inst);
    EXPECT_TRUE(ValidateDecomposition(dec).ok) << t;
    EXPECT_EQ(dec.h.KindName(), "weighted_rank");
    EXPECT_TRUE(dec.bound_guaranteed);
    EXPECT_LE(*dec.gamma_h, *dec.gamma_bound + 1e-9) << t;
    // Mass of the non-dominant part over the total is a looser bound
    // whenever the dominant weights are constant.
    EXPECT_LT(*dec.gamma_bound, 1.0);
  }
}

TEST(GeneratorTest, InvariantsAndDeterminism) {
  for (int t = 0; t < 20; ++t) {
    const auto cov = GenerateCoverage(6, 15, 0.1, t);
    for (const Subset s : cov.gamma) EXPECT_FALSE(s.Empty());
    EXPECT_EQ(SerializeInstance(MakeInstance(cov)),
              SerializeInstance(MakeInstance(GenerateCoverage(6, 15, 0.1, t))));

    const auto fl = GenerateFacility(5, 3, 2, 4, t);
    for (const auto& row : fl.w) {
      for (double v : row) {
        EXPECT_GE(v, 2);
        EXPECT_LE(v, 4);
        EXPECT_EQ(v, std::floor(v));
      }
    }

    WrsParams params;
    params.n = 4 + t % 7;
    const auto wrs = GenerateWrs(params, t);
    EXPECT_EQ(wrs.matroids.size(), 4u);
    LaminarFamily blocks;
    for (const Matroid& m : wrs.matroids) {
      const Subset full = Subset::Full(params.n);
      for (int e = 0; e < params.n; ++e) {
        EXPECT_EQ(m.Rank(Subset().With(e)), 1);
        EXPECT_EQ(m.Rank(full.Without(e)), m.FullRank());
      }
      for (const Subset b : m.blocks()) {
        EXPECT_GE(b.Size(), 2);
        blocks.sets.push_back(b);
        blocks.phi.push_back(std::vector<double>(b.Size() + 1, 0.0));
      }
    }
    EXPECT_EQ(ValidateLaminarFamily(params.n, blocks), "");
  }
  EXPECT_THROW(GenerateCoverage(0, 3, 0.5, 1), PreconditionError);
  EXPECT_THROW(GenerateFacility(3, 0, 0, 1, 1), PreconditionError);
  EXPECT_THROW(GenerateWrs(WrsParams{1, 1, true, 0, 1}, 1), PreconditionError);
}

TEST(GeneratorTest, GoldenFiles) {
  const std::string dir = HCURV_GOLDEN_DIR;
  EXPECT_EQ(SerializeInstance(MakeInstance(GenerateCoverage(10, 20, 0.3, 1), 1)),
            ReadFile(dir + "/coverage_n10_v20_d03_seed1.json"));
  EXPECT_EQ(SerializeInstance(MakeInstance(GenerateFacility(8, 5, 0, 10, 2), 2)),
            ReadFile(dir + "/facility_n8_i5_w0-10_seed2.json"));
  WrsParams params;
  params.n = 8;
  params.partition_matroids = 3;
  params.with_uniform = false;
  EXPECT_EQ(SerializeInstance(MakeInstance(GenerateWrs(params, 3), 3)),
            ReadFile(dir + "/wrs_n8_p3_seed3.json"));
}

void ExpectRoundTrip(const Instance& inst) {
  const Instance back = ParseInstance(SerializeInstance(inst));
  EXPECT_EQ(back.family, inst.family);
  EXPECT_EQ(back.n, inst.n);
  EXPECT_EQ(back.seed, inst.seed);
  EXPECT_EQ(SerializeInstance(back), SerializeInstance(inst));
  const auto f = InstanceFunction(inst);
  const auto g = InstanceFunction(back);
  Rng rng(inst.seed + 17);
  for (int t = 0; t < 100; ++t) {
    const Subset x = Subset::FromMask(rng.Bits()) & Subset::Full(inst.n);
    EXPECT_EQ(f.Value(x), g.Value(x));
  }
}

TEST(InstanceIoTest, RoundTripEveryFamily) {
  ExpectRoundTrip(MakeInstance(GenerateCoverage(12, 30, 0.2, 5), 5));
  ExpectRoundTrip(MakeInstance(GenerateFacility(9, 4, 0, 10, 6), 6));
  ExpectRoundTrip(MakeInstance(GenerateWrs(WrsParams{}, 7), 7));
  WeightedRankSumInstance coef = GenerateWrs(WrsParams{}, 8);
  coef.coefficients.assign(coef.matroids.size(), 0.5);
  ExpectRoundTrip(MakeInstance(coef, 8));
  Rng rng(9);
  for (const testing::MNatKind kind : testing::kAllMNatKinds) {
    ExpectRoundTrip(MakeInstance(testing::RandomMNat(rng, kind, 7), 9));
  }
  std::vector<double> values(8);
  for (int m = 0; m < 8; ++m) values[m] = std::sqrt(std::popcount(unsigned(m)));
  ExpectRoundTrip(MakeInstance(TableInstance{3, values}, 10));
}

TEST(InstanceIoTest, SchemaErrorsCarryLines) {
  const std::string text =
      "{\n"
      "  \"family\": \"wrs\",\n"
      "  \"n\": 3,\n"
      "  \"matroids\": [\n"
      "    {\"type\": \"uniform\", \"rank\": 1},\n"
      "    {\"type\": \"partition\", \"blocks\": [[0, 5]],\n"
      "     \"capacities\": [1]}\n"
      "  ],\n"
      "  \"weights\": [[1, 1, 1], [1, 1, 1]]\n"
      "}\n";
  try {
    ParseInstance(text);
    FAIL() << "expected a schema error";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.line(), 6);
    EXPECT_EQ(e.pointer(), "/matroids/1/blocks/0/1");
    EXPECT_NE(std::string(e.what()).find("line 6"), std::string::npos);
  }

  try {
    ParseInstance("{\n  \"family\": \"coverage\",\n  \"n\": 2\n}\n");
    FAIL() << "expected a schema error";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_NE(std::string(e.what()).find("sets"), std::string::npos);
  }

  try {
    ParseInstance("{\n  \"family\": \"coverage\",\n  \"n\": 2,\n  \"sets\": [[0,]]\n}");
    FAIL() << "expected a syntax error";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.line(), 4);
  }

  EXPECT_THROW(ParseInstance(R"({"family": "nope", "n": 1})"), SchemaError);
  EXPECT_THROW(ParseInstance(R"({"family": "table", "n": 2, "values": [0]})"),
               SchemaError);
  EXPECT_THROW(
      ParseInstance(R"({"family": "coverage", "n": 2, "sets": [[]]})"),
      SchemaError);
  EXPECT_THROW(
      ParseInstance(
          R"({"family": "mnat", "n": 3, "h": {"type": "quadratic", "matrix": [[0,-1,-2],[-1,0,-3],[-2,-3,0]]}})"),
      SchemaError);
}

TEST(InstanceIoTest, DecomposeDispatch) {
  const Instance fl = MakeInstance(FacilityLocationInstance{{{2, 1}}});
  const Decomposition a = DecomposeInstance(fl, "family");
  EXPECT_EQ(a.method, "facility");
  EXPECT_NEAR(*a.gamma_h, 0.0, 1e-12);
  EXPECT_NEAR(a.c(), 1.0, 1e-12);

  const Instance modular = MakeInstance(TableInstance{2, {0, 1, 2, 3}});
  const Decomposition b = DecomposeInstance(modular, "trivial");
  EXPECT_NEAR(*b.gamma_h, 0.0, 1e-12);
  EXPECT_NEAR(b.c(), 0.0, 1e-12);

  const Instance cov = MakeInstance(Cov(2, {Subset::Of({0, 1})}));
  const Decomposition c = DecomposeInstance(cov, "quadratic");
  EXPECT_NEAR(*c.gamma_h, 0.0, 1e-12);
  EXPECT_NEAR(c.c(), 1.0, 1e-12);

  EXPECT_THROW(DecomposeInstance(modular, "family"), PreconditionError);
  EXPECT_THROW(DecomposeInstance(cov, "mixture"), PreconditionError);
  EXPECT_THROW(DecomposeInstance(cov, "bogus"), PreconditionError);
  EXPECT_EQ(DecomposeInstance(MakeInstance(MNatConcaveFn::ConcaveOfCardinality(
                                  3, {0, 1, 1.5, 1.75})),
                              "family")
                .method,
            "identity");
}

}  // namespace
}  // namespace hcurv
