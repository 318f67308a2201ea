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

#include <bit>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "hcurv/cli/cli.h"
#include "hcurv/instances/generators.h"
#include "hcurv/instances/instance_io.h"
#include "hcurv/mconcave/mnat_concave.h"
#include "hcurv/setfn/random.h"
#include "json.hpp"

namespace hcurv::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;

  json Json() const { return json::parse(out); }
};

Outcome Call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hcurv_cli_" + std::to_string(::testing::UnitTest::GetInstance()
                                              ->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string Save(const std::string& name, const Instance& inst) {
    return Write(name, SerializeInstance(inst));
  }

  fs::path dir_;
};

TEST_F(CliTest, DecomposeExamples) {
  const std::string fl = Write("fl.json", R"({"family": "facility", "n": 2,
      "weights": [[2, 1]]})");
  Outcome r = Call({"decompose", "--instance", fl, "--method", "family"});
  ASSERT_EQ(r.code, kOk) << r.err;
  json d = r.Json()["decomposition"];
  EXPECT_EQ(d["gamma_h"].get<double>(), 0.0);
  EXPECT_EQ(d["c"].get<double>(), 1.0);
  EXPECT_TRUE(r.Json()["checks"]["ok"].get<bool>());
  EXPECT_EQ(r.Json()["schema_version"].get<int>(), 1);

  const std::string modular = Write(
      "mod.json", R"({"family": "table", "n": 2, "values": [0, 1, 2, 3]})");
  r = Call({"decompose", "--instance", modular, "--method", "trivial"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.Json()["decomposition"]["gamma_h"].get<double>(), 0.0);
  EXPECT_EQ(r.Json()["decomposition"]["c"].get<double>(), 0.0);

  const std::string cov =
      Write("cov.json", R"({"family": "coverage", "n": 2, "sets": [[0, 1]]})");
  r = Call({"decompose", "--instance", cov, "--method", "quadratic"});
  ASSERT_EQ(r.code, kOk) << r.err;
  d = r.Json()["decomposition"];
  EXPECT_EQ(d["gamma_h"].get<double>(), 0.0);
  EXPECT_EQ(d["c"].get<double>(), 1.0);
  EXPECT_EQ(d["hessian_source"].get<std::string>(), "coverage");
  EXPECT_EQ(d["matrix"].size(), 2u);
}

TEST_F(CliTest, MaximizeSqrtInstance) {
  std::vector<double> phi;
  for (int t = 0; t <= 8; ++t) phi.push_back(std::sqrt(t));
  const std::string path =
      Save("sqrt.json", MakeInstance(MNatConcaveFn::ConcaveOfCardinality(8, phi)));
  const Outcome r = Call({"maximize", "--instance", path, "--method",
                          "identity", "--k", "4", "--oracle-mode"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = r.Json();
  const json& cg = j["results"][0];
  EXPECT_EQ(cg["algorithm"].get<std::string>(), "continuous_greedy");
  EXPECT_GE(cg["ratio"].get<double>(), 0.999);
  EXPECT_NEAR(cg["value"].get<double>(), 2.0, 1e-12);
  EXPECT_GT(j["bounds"]["gamma"].get<double>(),
            j["bounds"]["curvature"].get<double>());
}

TEST_F(CliTest, BaselinesOnly) {
  const Outcome r =
      Call({"maximize", "--family", "facility", "--n", "8", "--gen-seed", "4",
            "--k", "3", "--algorithms", "lazy_greedy"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = r.Json();
  EXPECT_FALSE(j.contains("decomposition"));
  ASSERT_EQ(j["results"].size(), 1u);
  EXPECT_EQ(j["results"][0]["algorithm"].get<std::string>(), "lazy_greedy");
  EXPECT_FALSE(j["results"][0].contains("diagnostics"));
  EXPECT_GE(j["results"][0]["ratio"].get<double>(), 1.0 - 1.0 / std::numbers::e);
}

TEST_F(CliTest, FacilityRatioMeetsBound) {
  const std::string path =
      Save("fl.json", MakeInstance(GenerateFacility(10, 6, 0, 10, 11), 11));
  const Outcome r = Call({"maximize", "--instance", path, "--k", "3",
                          "--epsilon", "0.1", "--trials", "50",
                          "--oracle-mode", "--seed", "5"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = r.Json();
  const double gamma = j["decomposition"]["gamma_h"].get<double>();
  EXPECT_GE(j["results"][0]["ratio"].get<double>(),
            1.0 - gamma / std::numbers::e - 0.12);
  EXPECT_EQ(j["results"][0]["diagnostics"]["trials"].get<int>(), 50);
}

TEST_F(CliTest, DeterministicModuloVolatileFields) {
  const std::string path =
      Save("cov.json", MakeInstance(GenerateCoverage(7, 14, 0.3, 3), 3));
  const std::vector<std::string> base{"maximize", "--instance", path, "--k",
                                      "3", "--seed", "9", "--trials", "5",
                                      "--epsilon", "0.25"};
  auto with_threads = [&](const std::string& t) {
    std::vector<std::string> a = base;
    a.insert(a.end(), {"--threads", t});
    return a;
  };
  const Outcome a = Call(with_threads("1"));
  const Outcome b = Call(with_threads("4"));
  const Outcome c = Call(with_threads("1"));
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(StripVolatile(a.out), StripVolatile(b.out));
  EXPECT_EQ(StripVolatile(a.out), StripVolatile(c.out));
  EXPECT_EQ(StripVolatile(a.out).find("wall_time_ms"), std::string::npos);
  EXPECT_NE(a.out.find("timestamp"), std::string::npos);
}

TEST_F(CliTest, ExitCodes) {
  const std::string fl = Write("fl.json", R"({"family": "facility", "n": 2,
      "weights": [[2, 1]]})");
  EXPECT_EQ(Call({}).code, kUsage);
  EXPECT_EQ(Call({"maximize", "--instance", fl}).code, kUsage);
  EXPECT_EQ(Call({"maximize", "--instance", fl, "--k", "1", "--epsilon", "2"})
                .code,
            kUsage);
  EXPECT_EQ(Call({"maximize", "--instance", fl, "--k", "1", "--algorithms",
                  "simplex"})
                .code,
            kUsage);
  EXPECT_EQ(Call({"decompose", "--instance", fl, "--method", "mixture"}).code,
            kUsage);
  EXPECT_EQ(Call({"decompose", "--instance", fl, "--format", "csv"}).code,
            kUsage);
  const Outcome infeasible = Call({"maximize", "--instance", fl, "--k", "3"});
  EXPECT_EQ(infeasible.code, kInfeasible);
  EXPECT_NE(infeasible.err.find("infeasible"), std::string::npos);
  EXPECT_EQ(Call({"verify", "--instance", fl, "--check-cap", "1"}).code,
            kCapExceeded);
  EXPECT_EQ(Call({"decompose", "--family", "coverage", "--n", "12",
                  "--method", "quadratic", "--opt-cap", "3"})
                .code,
            kOk);
  EXPECT_EQ(Call({"decompose", "--family", "facility", "--n", "12", "--method",
                  "quadratic"})
                .code,
            kCapExceeded);
  EXPECT_EQ(Call({"--help"}).code, kOk);
}

TEST_F(CliTest, SchemaErrorsReportLines) {
  const std::string bad = Write("bad.json",
                                "{\n  \"family\": \"coverage\",\n  \"n\": 3,\n"
                                "  \"sets\": [[0, 1],\n           [2, 9]]\n}\n");
  const Outcome r = Call({"decompose", "--instance", bad});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("line 5"), std::string::npos) << r.err;
  EXPECT_EQ(Call({"decompose", "--instance", (dir_ / "missing.json").string()})
                .code,
            kUsage);
}

TEST_F(CliTest, VerifyReports) {
  const std::string fl =
      Save("fl.json", MakeInstance(GenerateFacility(6, 3, 0, 10, 2), 2));
  Outcome r = Call({"verify", "--instance", fl});
  ASSERT_EQ(r.code, kOk) << r.out;
  json j = r.Json();
  EXPECT_TRUE(j["ok"].get<bool>());
  bool saw_bound = false;
  for (const json& c : j["checks"]) {
    EXPECT_TRUE(c["ok"].get<bool>()) << c.dump();
    saw_bound = saw_bound || c["name"] == "gamma_bound";
  }
  EXPECT_TRUE(saw_bound);

  const std::string cov = Write(
      "cov.json", R"({"family": "coverage", "n": 3, "sets": [[0, 1], [1, 2]]})");
  r = Call({"verify", "--instance", cov, "--mnat"});
  EXPECT_EQ(r.code, kVerifyFailed);
  j = r.Json();
  const json& ex = j["checks"][2];
  EXPECT_EQ(ex["name"].get<std::string>(), "f_exchange");
  EXPECT_EQ(ex["witness"]["x"], json({0, 2}));
  EXPECT_EQ(ex["witness"]["y"], json({1}));
  EXPECT_EQ(ex["witness"]["i"].get<int>(), 0);

  // sqrt|X| with h({0,1}) raised by one.
  std::vector<double> values(8);
  for (int m = 0; m < 8; ++m) values[m] = std::sqrt(std::popcount(unsigned(m)));
  values[0b011] += 1.0;
  const std::string corrupt = Save("corrupt.json", MakeInstance(TableInstance{3, values}));
  r = Call({"verify", "--instance", corrupt, "--mnat", "--level", "basic"});
  EXPECT_EQ(r.code, kVerifyFailed);
  j = r.Json();
  EXPECT_FALSE(j["checks"][2]["ok"].get<bool>());
  EXPECT_TRUE(j["checks"][2]["witness"].contains("x"));
}

TEST_F(CliTest, GenerateRoundTrip) {
  for (const std::string family : {"coverage", "facility", "wrs"}) {
    const std::string path = (dir_ / (family + ".json")).string();
    const Outcome r = Call({"generate", "--family", family, "--n", "9",
                            "--seed", "21", "--out", path});
    ASSERT_EQ(r.code, kOk) << r.err;
    const Instance loaded = LoadInstance(path);
    EXPECT_EQ(loaded.seed, 21u);
    Instance direct;
    if (family == "coverage") {
      direct = MakeInstance(GenerateCoverage(9, 20, 0.3, 21), 21);
    } else if (family == "facility") {
      direct = MakeInstance(GenerateFacility(9, 5, 0, 10, 21), 21);
    } else {
      direct = MakeInstance(GenerateWrs(WrsParams{9, 3, true, 1, 10}, 21), 21);
    }
    const auto f = InstanceFunction(loaded);
    const auto g = InstanceFunction(direct);
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
      const Subset x = Subset::FromMask(rng.Bits()) & Subset::Full(9);
      EXPECT_EQ(f.Value(x), g.Value(x)) << family;
    }
  }
  EXPECT_EQ(Call({"generate", "--family", "nope"}).code, kUsage);
}

TEST_F(CliTest, BenchOverDirectory) {
  const fs::path bench = dir_ / "bench";
  fs::create_directories(bench);
  for (int s = 0; s < 3; ++s) {
    std::ofstream((bench / ("fl" + std::to_string(s) + ".json")).string())
        << SerializeInstance(MakeInstance(GenerateFacility(6, 3, 0, 10, s), s));
  }
  const Outcome csv = Call({"bench", "--dir", bench.string(), "--k", "2",
                            "--format", "csv", "--jobs", "2", "--oracle-mode"});
  ASSERT_EQ(csv.code, kOk) << csv.err;
  std::istringstream lines(csv.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 1 + 3 * 2);

  const Outcome j1 = Call({"bench", "--dir", bench.string(), "--k", "2",
                           "--jobs", "3", "--oracle-mode"});
  const Outcome j2 = Call({"bench", "--dir", bench.string(), "--k", "2",
                           "--jobs", "1", "--oracle-mode"});
  ASSERT_EQ(j1.code, kOk);
  EXPECT_EQ(StripVolatile(j1.out), StripVolatile(j2.out));
  EXPECT_EQ(j1.Json()["runs"].size(), 3u);
}

TEST_F(CliTest, EnvironmentCaps) {
  const std::string path =
      Save("fl.json", MakeInstance(GenerateFacility(6, 3, 0, 10, 1), 1));
  ::setenv(kOptCapEnv, "3", 1);
  Outcome r = Call({"maximize", "--instance", path, "--k", "2",
                    "--algorithms", "lazy_greedy"});
  ::unsetenv(kOptCapEnv);
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(r.Json()["opt"].is_null());
  EXPECT_TRUE(r.Json()["results"][0]["ratio"].is_null());

  ::setenv(kCheckCapEnv, "4", 1);
  r = Call({"verify", "--instance", path});
  EXPECT_EQ(r.code, kCapExceeded);
  r = Call({"verify", "--instance", path, "--check-cap", "8"});
  EXPECT_EQ(r.code, kOk);
  ::unsetenv(kCheckCapEnv);
}

}  // namespace
}  // namespace hcurv::cli
