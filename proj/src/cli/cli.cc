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

#include "hcurv/cli/cli.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "CLI11.hpp"
#include "hcurv/decompose/decomposition.h"
#include "hcurv/instances/generators.h"
#include "hcurv/instances/instance_io.h"
#include "hcurv/mconcave/exchange.h"
#include "hcurv/optimizer/continuous_greedy.h"
#include "hcurv/optimizer/lazy_greedy.h"
#include "hcurv/optimizer/maximize.h"
#include "hcurv/setfn/brute_force.h"
#include "hcurv/setfn/config.h"
#include "hcurv/setfn/errors.h"
#include "json.hpp"

namespace hcurv::cli {
namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kSchemaVersion = 1;
constexpr int kDefaultCheckCap = 12;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int EnvCap(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 0 || value > kMaxGroundSize) {
    throw UsageError(std::string(name) + " must be an integer in [0, 64]");
  }
  return static_cast<int>(value);
}

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::string Timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

ordered_json SetJson(Subset s) { return ordered_json(s.Elements()); }

ordered_json Maybe(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

struct GeneratorOptions {
  std::string family;
  int n = 10;
  int items = 20;
  double density = 0.3;
  int customers = 5;
  std::optional<int> weight_lo;
  int weight_hi = 10;
  int partition_matroids = 3;
  bool no_uniform = false;
  uint64_t seed = 0;
};

void AddGeneratorFlags(CLI::App* app, GeneratorOptions& g,
                       const std::string& seed_flag) {
  app->add_option("--n", g.n, "Ground set size")->check(CLI::Range(1, 64));
  app->add_option("--items", g.items, "Coverage: number of items");
  app->add_option("--density", g.density, "Coverage: edge probability");
  app->add_option("--customers", g.customers, "Facility: number of customers");
  app->add_option("--weight-lo", g.weight_lo,
                  "Smallest integer weight (facility 0, wrs 1)");
  app->add_option("--weight-hi", g.weight_hi, "Largest integer weight");
  app->add_option("--matroids", g.partition_matroids,
                  "Wrs: number of nested partition matroids");
  app->add_flag("--no-uniform", g.no_uniform,
                "Wrs: leave out the uniform matroid");
  app->add_option(seed_flag, g.seed, "Generator seed");
}

Instance Generate(const GeneratorOptions& g) {
  if (g.family == "coverage") {
    return MakeInstance(GenerateCoverage(g.n, g.items, g.density, g.seed),
                        g.seed);
  }
  if (g.family == "facility") {
    return MakeInstance(GenerateFacility(g.n, g.customers, g.weight_lo.value_or(0),
                                         g.weight_hi, g.seed),
                        g.seed);
  }
  if (g.family == "wrs") {
    WrsParams params{g.n, g.partition_matroids, !g.no_uniform,
                     g.weight_lo.value_or(1), g.weight_hi};
    return MakeInstance(GenerateWrs(params, g.seed), g.seed);
  }
  throw UsageError("unknown generator family \"" + g.family +
                   "\" (coverage, facility, wrs)");
}

// Options shared by decompose, maximize, verify and bench.
struct CommonOptions {
  std::string instance;
  GeneratorOptions gen;
  std::string method;
  std::string out;
  std::string format = "json";
  int opt_cap = 0;
  int check_cap = 0;
};

void AddCommonFlags(CLI::App* app, CommonOptions& o, bool with_instance) {
  if (with_instance) {
    app->add_option("--instance", o.instance, "Instance JSON file");
    app->add_option("--family", o.gen.family,
                    "Generate the instance instead (coverage, facility, wrs)");
    AddGeneratorFlags(app, o.gen, "--gen-seed");
  }
  app->add_option("--method", o.method,
                  "Decomposition: trivial, quadratic, family, mixture, "
                  "identity");
  app->add_option("--out", o.out, "Write the report here instead of stdout");
  app->add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--opt-cap", o.opt_cap,
                  "Largest n for brute-force OPT (env HCURV_OPT_CAP)")
      ->check(CLI::Range(0, 64));
  app->add_option("--check-cap", o.check_cap,
                  "Largest n for exhaustive checks and gamma_h "
                  "(env HCURV_CHECK_CAP)")
      ->check(CLI::Range(0, 64));
}

struct Loaded {
  Instance instance;
  std::string source;
};

Loaded LoadOrGenerate(const CommonOptions& o) {
  if (!o.instance.empty() && !o.gen.family.empty()) {
    throw UsageError("give either --instance or --family, not both");
  }
  if (!o.instance.empty()) return {LoadInstance(o.instance), o.instance};
  if (!o.gen.family.empty()) return {Generate(o.gen), "generated"};
  throw UsageError("an instance is required (--instance or --family)");
}

std::string MethodFor(const CommonOptions& o, const Instance& inst) {
  if (!o.method.empty()) return o.method;
  return inst.family == "table" ? "quadratic" : "family";
}

ordered_json InstanceSummary(const Loaded& loaded) {
  ordered_json j;
  j["source"] = loaded.source;
  j["family"] = loaded.instance.family;
  j["n"] = loaded.instance.n;
  j["seed"] = loaded.instance.seed;
  return j;
}

ordered_json DecompositionJson(const Decomposition& dec) {
  ordered_json j;
  j["method"] = dec.method;
  j["c"] = dec.curvature ? ordered_json(dec.curvature->c) : nullptr;
  j["gamma_h"] = Maybe(dec.gamma_h);
  j["gamma_bound"] = Maybe(dec.gamma_bound);
  j["bound_guaranteed"] = dec.bound_guaranteed;
  j["curvature_bound"] =
      dec.curvature ? ordered_json(CurvatureApproximationBound(dec.curvature->c))
                    : nullptr;
  if (dec.bounds) {
    j["hessian_source"] = std::string(SourceName(dec.bounds->source));
  }
  if (dec.fit_error) j["fit_error"] = *dec.fit_error;
  if (dec.matrix) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < dec.matrix->n(); ++r) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < dec.matrix->n(); ++c) row.push_back((*dec.matrix)(r, c));
      rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
  }
  try {
    j["h"] = MNatToJson(dec.h);
  } catch (const PreconditionError&) {
    j["h"] = nullptr;
  }
  return j;
}

void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

std::string Finish(ordered_json report) {
  report["timestamp"] = Timestamp();
  return DumpJson(report) + "\n";
}

void RequireJson(const CommonOptions& o, const std::string& command) {
  if (o.format != "json") throw UsageError(command + " only emits json");
}

// ---- decompose ----------------------------------------------------------

int CmdDecompose(const CommonOptions& o, std::ostream& out) {
  RequireJson(o, "decompose");
  const auto start = Clock::now();
  const Loaded loaded = LoadOrGenerate(o);
  const Instance& inst = loaded.instance;
  const std::string method = MethodFor(o, inst);
  const Decomposition dec = DecomposeInstance(inst, method, o.check_cap);

  ordered_json checks;
  bool ok = true;
  if (inst.n <= o.check_cap) {
    const DecompositionCheck check = ValidateDecomposition(dec, o.check_cap);
    ok = check.ok;
    checks["performed"] = true;
    checks["ok"] = check.ok;
    checks["failure"] = check.ok ? ordered_json(nullptr) : ordered_json(check.failure);
  } else {
    checks["performed"] = false;
    checks["reason"] = "n exceeds the check cap";
  }

  ordered_json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = "decompose";
  report["instance"] = InstanceSummary(loaded);
  report["decomposition"] = DecompositionJson(dec);
  report["checks"] = std::move(checks);
  report["wall_time_ms"] = MillisSince(start);
  Emit(Finish(std::move(report)), o.out, out);
  return ok ? kOk : kVerifyFailed;
}

// ---- maximize -----------------------------------------------------------

struct MaximizeOptions {
  int k = -1;
  SolverConfig cfg;
  std::vector<std::string> algorithms{"continuous_greedy", "lazy_greedy"};
};

struct CsvRow {
  std::string instance;
  std::string family;
  int n = 0;
  int k = 0;
  std::string algorithm;
  double value = 0.0;
  std::optional<double> opt;
  std::optional<double> ratio;
  std::optional<double> bound;
  std::optional<double> gamma_h;
  std::optional<double> c;
  int64_t oracle_calls = 0;
  double wall_time_ms = 0.0;
};

ordered_json DiagnosticsJson(const MaximizeDiagnostics& d) {
  ordered_json j;
  j["oracle_mode"] = d.oracle_mode;
  j["oracle_set"] = d.oracle_set ? SetJson(*d.oracle_set) : nullptr;
  j["m"] = d.m;
  j["epsilon"] = d.epsilon;
  j["delta_t"] = d.delta_t;
  j["steps"] = d.steps;
  j["exact_gradient"] = d.exact_gradient;
  j["gradient_samples"] = d.gradient_samples;
  j["grid_size"] = d.grid_size;
  j["cells_run"] = d.cells_run;
  j["cells_feasible"] = d.cells_feasible;
  j["alpha"] = d.alpha;
  j["beta"] = d.beta;
  j["support_size"] = d.support_size;
  j["closure_lower_bound"] = d.closure_lower_bound;
  j["multilinear_g"] = d.multilinear_g;
  j["mean_f"] = d.mean_f;
  j["mean_g"] = d.mean_g;
  j["mean_h"] = d.mean_h;
  j["trials"] = d.trials;
  j["g_calls"] = d.g_calls;
  j["h_calls"] = d.h_calls;
  ordered_json steps = ordered_json::array();
  for (const StepLog& s : d.step_log) {
    steps.push_back(ordered_json::array({s.lin, s.clo, s.g_value}));
  }
  j["step_log"] = std::move(steps);
  return j;
}

const std::vector<std::string>& KnownAlgorithms() {
  static const std::vector<std::string> names{"continuous_greedy",
                                              "lazy_greedy", "naive_greedy"};
  return names;
}

ordered_json RunMaximize(const Loaded& loaded, const CommonOptions& o,
                         const MaximizeOptions& m, std::vector<CsvRow>* rows) {
  const auto start = Clock::now();
  const Instance& inst = loaded.instance;
  if (m.k < 0 || m.k > inst.n) {
    throw InfeasibleError("k = " + std::to_string(m.k) +
                          " is outside [0, n] for n = " +
                          std::to_string(inst.n));
  }
  if (m.algorithms.empty()) throw UsageError("no algorithms requested");
  for (const std::string& a : m.algorithms) {
    const auto& known = KnownAlgorithms();
    if (std::find(known.begin(), known.end(), a) == known.end()) {
      throw UsageError("unknown algorithm \"" + a + "\"");
    }
  }
  SolverConfig cfg = m.cfg;
  cfg.oracle_cap = o.opt_cap;
  cfg.Validate();

  std::vector<std::string> warnings;
  std::optional<SubsetValue> opt;
  if (inst.n <= o.opt_cap) {
    opt = BruteForceMaxExact(InstanceFunction(inst), m.k, o.opt_cap);
  } else {
    warnings.push_back("OPT skipped: n exceeds the opt cap");
  }

  const bool continuous =
      std::find(m.algorithms.begin(), m.algorithms.end(),
                "continuous_greedy") != m.algorithms.end();
  std::optional<Decomposition> dec;
  if (continuous) {
    dec = DecomposeInstance(inst, MethodFor(o, inst), o.check_cap);
    if (!dec->gamma_h) {
      warnings.push_back("gamma_h not computed: n exceeds the check cap");
    }
  }

  auto ratio_of = [&](double value) -> std::optional<double> {
    if (!opt) return std::nullopt;
    if (opt->value <= kTolerance) return 1.0;
    return value / opt->value;
  };

  ordered_json results = ordered_json::array();
  for (const std::string& algorithm : m.algorithms) {
    const auto t0 = Clock::now();
    ordered_json r;
    r["algorithm"] = algorithm;
    double value = 0.0;
    int64_t calls = 0;
    std::optional<double> bound;
    ordered_json diagnostics;
    Subset set;
    if (algorithm == "continuous_greedy") {
      const MaximizeResult res = Maximize(dec->g, dec->h, m.k, cfg);
      value = res.value;
      set = res.set;
      calls = res.diagnostics.g_calls + res.diagnostics.h_calls;
      if (dec->gamma_h) bound = GammaApproximationBound(*dec->gamma_h, cfg.epsilon);
      for (const std::string& w : res.diagnostics.warnings) warnings.push_back(w);
      diagnostics = DiagnosticsJson(res.diagnostics);
      r["mean_value"] = res.diagnostics.mean_f;
    } else {
      const SetFunctionOracle f = InstanceFunction(inst);
      const SubsetValue res =
          algorithm == "lazy_greedy" ? LazyGreedy(f, m.k) : NaiveGreedy(f, m.k);
      value = res.value;
      set = res.set;
      calls = f.calls();
      bound = 1.0 - 1.0 / std::numbers::e;
    }
    const double elapsed = MillisSince(t0);
    r["value"] = value;
    r["set"] = SetJson(set);
    r["ratio"] = Maybe(ratio_of(value));
    r["bound"] = Maybe(bound);
    r["oracle_calls"] = calls;
    r["wall_time_ms"] = elapsed;
    if (!diagnostics.is_null()) r["diagnostics"] = std::move(diagnostics);
    results.push_back(std::move(r));
    if (rows != nullptr) {
      rows->push_back({loaded.source, inst.family, inst.n, m.k, algorithm,
                       value, opt ? std::optional<double>(opt->value)
                                  : std::nullopt,
                       ratio_of(value), bound,
                       dec ? dec->gamma_h : std::nullopt,
                       dec && dec->curvature
                           ? std::optional<double>(dec->curvature->c)
                           : std::nullopt,
                       calls, elapsed});
    }
  }

  ordered_json spec;
  spec["method"] = continuous ? ordered_json(dec->method) : nullptr;
  spec["k"] = m.k;
  spec["epsilon"] = cfg.epsilon;
  spec["delta_t"] = cfg.delta_t;
  spec["trials"] = cfg.trials;
  spec["seed"] = cfg.seed;
  spec["oracle_mode"] = cfg.oracle_mode;
  spec["algorithms"] = m.algorithms;

  ordered_json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = "maximize";
  report["instance"] = InstanceSummary(loaded);
  report["spec"] = std::move(spec);
  if (dec) {
    report["decomposition"] = DecompositionJson(*dec);
    ordered_json bounds;
    bounds["gamma"] = dec->gamma_h ? ordered_json(GammaApproximationBound(
                                         *dec->gamma_h, cfg.epsilon))
                                   : nullptr;
    bounds["curvature"] =
        dec->curvature ? ordered_json(CurvatureApproximationBound(dec->curvature->c))
                       : nullptr;
    report["bounds"] = std::move(bounds);
  }
  if (opt) {
    ordered_json o_json;
    o_json["value"] = opt->value;
    o_json["set"] = SetJson(opt->set);
    report["opt"] = std::move(o_json);
  } else {
    report["opt"] = nullptr;
  }
  report["results"] = std::move(results);
  report["warnings"] = warnings;
  report["wall_time_ms"] = MillisSince(start);
  return report;
}

std::string CsvNumber(const std::optional<double>& v) {
  if (!v) return "";
  char buffer[32];
  const auto res = std::to_chars(buffer, buffer + sizeof(buffer), *v);
  return std::string(buffer, res.ptr);
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::string Csv(const std::vector<CsvRow>& rows) {
  std::ostringstream s;
  s << "instance,family,n,k,algorithm,value,opt,ratio,bound,gamma_h,c,"
       "oracle_calls,wall_time_ms\n";
  for (const CsvRow& r : rows) {
    s << CsvField(r.instance) << ',' << r.family << ',' << r.n << ',' << r.k
      << ',' << r.algorithm << ',' << CsvNumber(r.value) << ','
      << CsvNumber(r.opt) << ',' << CsvNumber(r.ratio) << ','
      << CsvNumber(r.bound) << ',' << CsvNumber(r.gamma_h) << ','
      << CsvNumber(r.c) << ',' << r.oracle_calls << ','
      << CsvNumber(r.wall_time_ms) << '\n';
  }
  return s.str();
}

int CmdMaximize(const CommonOptions& o, const MaximizeOptions& m,
                std::ostream& out) {
  const Loaded loaded = LoadOrGenerate(o);
  std::vector<CsvRow> rows;
  ordered_json report = RunMaximize(loaded, o, m, &rows);
  Emit(o.format == "csv" ? Csv(rows) : Finish(std::move(report)), o.out, out);
  return kOk;
}

// ---- bench --------------------------------------------------------------

int CmdBench(const CommonOptions& o, const MaximizeOptions& m,
             const std::string& dir, int jobs, std::ostream& out,
             std::ostream& err) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw UsageError(dir + " is not a directory");
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw UsageError("no .json instances in " + dir);

  struct Slot {
    ordered_json report;
    std::vector<CsvRow> rows;
    int code = kOk;
  };
  std::vector<Slot> slots(files.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < files.size(); i = next++) {
      Slot& slot = slots[i];
      try {
        const Loaded loaded{LoadInstance(files[i]), files[i]};
        slot.report = RunMaximize(loaded, o, m, &slot.rows);
      } catch (const std::exception& e) {
        slot.report = ordered_json{{"instance", files[i]}, {"error", e.what()}};
        slot.code = dynamic_cast<const InfeasibleError*>(&e) ? kInfeasible
                    : dynamic_cast<const CapExceededError*>(&e) ? kCapExceeded
                                                                : kUsage;
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, files.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kOk;
  ordered_json runs = ordered_json::array();
  std::vector<CsvRow> rows;
  for (size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].code != kOk) {
      err << "error: " << files[i] << ": "
          << slots[i].report["error"].get<std::string>() << "\n";
      if (code == kOk) code = slots[i].code;
    }
    runs.push_back(std::move(slots[i].report));
    rows.insert(rows.end(), slots[i].rows.begin(), slots[i].rows.end());
  }
  ordered_json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = "bench";
  report["directory"] = dir;
  report["runs"] = std::move(runs);
  Emit(o.format == "csv" ? Csv(rows) : Finish(std::move(report)), o.out, out);
  return code;
}

// ---- verify -------------------------------------------------------------

ordered_json MonotoneWitnessJson(const MonotoneSubmodularWitness& w) {
  ordered_json j;
  j["kind"] = w.kind == MonotoneSubmodularWitness::Kind::kMonotonicity
                  ? "monotonicity"
                  : "submodularity";
  j["x"] = SetJson(w.x);
  j["i"] = w.i;
  j["j"] = w.j >= 0 ? ordered_json(w.j) : nullptr;
  j["value"] = w.value;
  j["message"] = w.ToString();
  return j;
}

ordered_json ExchangeWitnessJson(const ExchangeWitness& w) {
  ordered_json j;
  j["x"] = SetJson(w.x);
  j["y"] = SetJson(w.y);
  j["i"] = w.i;
  j["message"] = w.ToString();
  return j;
}

ordered_json CheckJson(const std::string& name, bool ok, ordered_json witness) {
  ordered_json j;
  j["name"] = name;
  j["ok"] = ok;
  j["witness"] = std::move(witness);
  return j;
}

int CmdVerify(const CommonOptions& o, const std::string& level, bool mnat,
              std::ostream& out) {
  RequireJson(o, "verify");
  const auto start = Clock::now();
  const Loaded loaded = LoadOrGenerate(o);
  const Instance& inst = loaded.instance;
  if (inst.n > o.check_cap) {
    throw CapExceededError("verify: instance too large", inst.n, o.check_cap);
  }
  const SetFunctionOracle f = InstanceFunction(inst);
  ordered_json checks = ordered_json::array();
  bool ok = true;
  auto record = [&](ordered_json check) {
    ok = ok && check["ok"].get<bool>();
    checks.push_back(std::move(check));
  };

  const MonotoneSubmodularCheck ms = VerifyMonotoneSubmodular(f, o.check_cap);
  record(CheckJson("f_monotone_submodular", ms.ok,
                   ms.witness ? MonotoneWitnessJson(*ms.witness) : nullptr));
  const SubsetValue low = BruteForceMin(f, o.check_cap);
  record(CheckJson("f_nonnegative", low.value >= -kTolerance,
                   low.value >= -kTolerance
                       ? ordered_json(nullptr)
                       : ordered_json{{"x", SetJson(low.set)},
                                      {"value", low.value}}));
  if (mnat) {
    const ExchangeCheck ex = CheckExchangeProperty(f, o.check_cap);
    record(CheckJson("f_exchange", ex.ok,
                     ex.witness ? ExchangeWitnessJson(*ex.witness) : nullptr));
  }

  ordered_json decomposition = nullptr;
  if (level == "full") {
    const std::string method = MethodFor(o, inst);
    try {
      const Decomposition dec = DecomposeInstance(inst, method, o.check_cap);
      decomposition = DecompositionJson(dec);
      const DecompositionCheck dc = ValidateDecomposition(dec, o.check_cap);
      record(CheckJson("decomposition", dc.ok,
                       dc.ok ? ordered_json(nullptr)
                             : ordered_json{{"message", dc.failure}}));
      if (dec.gamma_h && dec.curvature &&
          (method == "trivial" || method == "quadratic")) {
        const bool below = *dec.gamma_h <= dec.curvature->c + kTolerance;
        record(CheckJson("gamma_h_at_most_c", below,
                         below ? ordered_json(nullptr)
                               : ordered_json{{"gamma_h", *dec.gamma_h},
                                              {"c", dec.curvature->c}}));
      }
      if (dec.gamma_h && dec.gamma_bound && dec.bound_guaranteed) {
        const bool below = *dec.gamma_h <= *dec.gamma_bound + kTolerance;
        record(CheckJson("gamma_bound", below,
                         below ? ordered_json(nullptr)
                               : ordered_json{{"gamma_h", *dec.gamma_h},
                                              {"bound", *dec.gamma_bound}}));
      }
    } catch (const PreconditionError& e) {
      record(CheckJson("decomposition", false,
                       ordered_json{{"message", e.what()}}));
    }
  }

  ordered_json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = "verify";
  report["instance"] = InstanceSummary(loaded);
  report["level"] = level;
  report["ok"] = ok;
  report["checks"] = std::move(checks);
  report["decomposition"] = std::move(decomposition);
  report["wall_time_ms"] = MillisSince(start);
  Emit(Finish(std::move(report)), o.out, out);
  return ok ? kOk : kVerifyFailed;
}

// ---- generate -----------------------------------------------------------

int CmdGenerate(const GeneratorOptions& g, const std::string& path,
                std::ostream& out) {
  Emit(SerializeInstance(Generate(g)), path, out);
  return kOk;
}

void StripInPlace(ordered_json& j) {
  if (j.is_object()) {
    j.erase("timestamp");
    j.erase("wall_time_ms");
    for (auto& [key, value] : j.items()) StripInPlace(value);
  } else if (j.is_array()) {
    for (auto& value : j) StripInPlace(value);
  }
}

}  // namespace

std::string StripVolatile(const std::string& json_text) {
  ordered_json j = ordered_json::parse(json_text);
  StripInPlace(j);
  return DumpJson(j) + "\n";
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Monotone submodular maximization with M-natural concave "
               "decompositions",
               "hcurv"};
  app.require_subcommand(1);

  CommonOptions common;
  MaximizeOptions max_opts;
  std::string level = "full";
  bool mnat = false;
  std::string bench_dir;
  int jobs = 1;
  GeneratorOptions gen;
  std::string gen_out;

  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--k", max_opts.k, "Cardinality")->required();
    sub->add_option("--epsilon", max_opts.cfg.epsilon, "Accuracy in (0, 1)");
    sub->add_option("--delta-t", max_opts.cfg.delta_t,
                    "Time step (default epsilon / n^2)");
    sub->add_option("--trials", max_opts.cfg.trials, "Rounding trials");
    sub->add_option("--seed", max_opts.cfg.seed, "Solver seed");
    sub->add_flag("--oracle-mode", max_opts.cfg.oracle_mode,
                  "Guess g(O), h(O) by brute force");
    sub->add_option("--threads", max_opts.cfg.threads,
                    "Worker threads (0 = hardware)");
    sub->add_option("--algorithms", max_opts.algorithms,
                    "continuous_greedy, lazy_greedy, naive_greedy")
        ->delimiter(',');
  };

  CLI::App* decompose =
      app.add_subcommand("decompose", "Build a decomposition and report it");
  AddCommonFlags(decompose, common, true);

  CLI::App* maximize =
      app.add_subcommand("maximize", "Run the optimizer and baselines");
  AddCommonFlags(maximize, common, true);
  add_solver(maximize);

  CLI::App* verify =
      app.add_subcommand("verify", "Exhaustively check an instance");
  AddCommonFlags(verify, common, true);
  verify->add_option("--level", level, "basic or full")
      ->check(CLI::IsMember({"basic", "full"}));
  verify->add_flag("--mnat", mnat, "Also check f for the exchange property");

  CLI::App* bench =
      app.add_subcommand("bench", "Run maximize over every .json in a directory");
  AddCommonFlags(bench, common, false);
  add_solver(bench);
  bench->add_option("--dir", bench_dir, "Instance directory")->required();
  bench->add_option("--jobs", jobs, "Instances run concurrently")
      ->check(CLI::Range(1, 256));

  CLI::App* generate = app.add_subcommand("generate", "Write a random instance");
  generate->add_option("--family", gen.family, "coverage, facility or wrs")
      ->required();
  AddGeneratorFlags(generate, gen, "--seed");
  generate->add_option("--out", gen_out, "Output file (default stdout)");

  std::vector<std::string> argv_storage{"hcurv"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    common.opt_cap = EnvCap(kOptCapEnv, Caps().brute_force);
    common.check_cap = EnvCap(kCheckCapEnv, kDefaultCheckCap);
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (decompose->parsed()) return CmdDecompose(common, out);
    if (maximize->parsed()) return CmdMaximize(common, max_opts, out);
    if (verify->parsed()) return CmdVerify(common, level, mnat, out);
    if (bench->parsed()) {
      return CmdBench(common, max_opts, bench_dir, jobs, out, err);
    }
    return CmdGenerate(gen, gen_out, out);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InfeasibleError& e) {
    err << "error: infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const IntegrityError& e) {
    err << "error: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace hcurv::cli
