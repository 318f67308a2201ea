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

#include "hcurv/instances/instance_io.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <utility>

#include "hcurv/setfn/errors.h"

namespace hcurv {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string Child(const std::string& pointer, const std::string& key) {
  std::string escaped;
  for (char ch : key) {
    if (ch == '~') {
      escaped += "~0";
    } else if (ch == '/') {
      escaped += "~1";
    } else {
      escaped += ch;
    }
  }
  return pointer + "/" + escaped;
}

std::string Child(const std::string& pointer, size_t index) {
  return pointer + "/" + std::to_string(index);
}

[[noreturn]] void Fail(const std::string& pointer, const std::string& what) {
  throw SchemaError(what, 0, pointer);
}

const json& Need(const json& j, const std::string& key,
                 const std::string& pointer) {
  if (!j.is_object()) Fail(pointer, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) Fail(pointer, "missing key \"" + key + "\"");
  return *it;
}

int64_t AsInt(const json& j, const std::string& pointer) {
  if (j.is_number_integer()) return j.get<int64_t>();
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (v == static_cast<double>(static_cast<int64_t>(v))) {
      return static_cast<int64_t>(v);
    }
  }
  Fail(pointer, "expected an integer");
}

double AsDouble(const json& j, const std::string& pointer) {
  if (!j.is_number()) Fail(pointer, "expected a number");
  return j.get<double>();
}

std::vector<double> AsDoubles(const json& j, const std::string& pointer) {
  if (!j.is_array()) Fail(pointer, "expected an array of numbers");
  std::vector<double> out;
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(AsDouble(j[i], Child(pointer, i)));
  }
  return out;
}

std::vector<int> AsInts(const json& j, const std::string& pointer) {
  if (!j.is_array()) Fail(pointer, "expected an array of integers");
  std::vector<int> out;
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(static_cast<int>(AsInt(j[i], Child(pointer, i))));
  }
  return out;
}

std::vector<std::vector<double>> AsMatrix(const json& j,
                                          const std::string& pointer) {
  if (!j.is_array()) Fail(pointer, "expected an array of rows");
  std::vector<std::vector<double>> out;
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(AsDoubles(j[i], Child(pointer, i)));
  }
  return out;
}

Subset AsSubset(const json& j, int n, const std::string& pointer) {
  Subset s;
  const std::vector<int> elements = AsInts(j, pointer);
  for (size_t i = 0; i < elements.size(); ++i) {
    const int e = elements[i];
    if (e < 0 || e >= n) {
      Fail(Child(pointer, i), "element " + std::to_string(e) +
                                  " outside the ground set");
    }
    if (s.Contains(e)) {
      Fail(Child(pointer, i), "duplicate element " + std::to_string(e));
    }
    s = s.With(e);
  }
  return s;
}

std::vector<Subset> AsSubsets(const json& j, int n,
                              const std::string& pointer) {
  if (!j.is_array()) Fail(pointer, "expected an array of element lists");
  std::vector<Subset> out;
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(AsSubset(j[i], n, Child(pointer, i)));
  }
  return out;
}

ordered_json SubsetJson(Subset s) { return ordered_json(s.Elements()); }

ordered_json SubsetsJson(const std::vector<Subset>& sets) {
  ordered_json out = ordered_json::array();
  for (const Subset s : sets) out.push_back(SubsetJson(s));
  return out;
}

ordered_json MatrixJson(const SymmetricMatrix& a) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < a.n(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < a.n(); ++j) row.push_back(a(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

// Runs a constructor that may throw PreconditionError and reports it as a
// schema problem at pointer.
template <typename Fn>
auto Checked(const std::string& pointer, Fn&& fn) {
  try {
    return fn();
  } catch (const PreconditionError& e) {
    Fail(pointer, e.what());
  }
}

// Input iterator that remembers the last character the parser read.
class TrackingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  TrackingIterator(const char* p, const char** last) : p_(p), last_(last) {}

  reference operator*() const {
    *last_ = p_;
    return *p_;
  }
  TrackingIterator& operator++() {
    ++p_;
    return *this;
  }
  TrackingIterator operator++(int) {
    TrackingIterator old = *this;
    ++p_;
    return old;
  }
  friend bool operator==(const TrackingIterator& a,
                         const TrackingIterator& b) {
    return a.p_ == b.p_;
  }

 private:
  const char* p_;
  const char** last_;
};

int LineAt(std::string_view text, size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(
                 std::count(text.begin(), text.begin() + offset, '\n'));
}

// Parses text and records the line on which every value starts, keyed by
// JSON pointer.
json ParseWithLines(std::string_view text, std::map<std::string, int>& lines) {
  struct Frame {
    bool array = false;
    size_t index = 0;
    std::string key;
  };
  std::vector<Frame> frames;
  const char* last = text.data();
  auto here = [&] {
    return LineAt(text, static_cast<size_t>(last - text.data()));
  };
  auto path = [&] {
    std::string p;
    for (const Frame& f : frames) {
      p = f.array ? Child(p, f.index) : Child(p, f.key);
    }
    return p;
  };
  auto advance = [&] {
    if (!frames.empty() && frames.back().array) ++frames.back().index;
  };
  json::parser_callback_t callback = [&](int, json::parse_event_t event,
                                         json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
      case json::parse_event_t::array_start:
        lines.emplace(path(), here());
        frames.push_back(
            {event == json::parse_event_t::array_start, 0, std::string()});
        break;
      case json::parse_event_t::key:
        frames.back().key = parsed.get<std::string>();
        break;
      case json::parse_event_t::value:
        lines.emplace(path(), here());
        advance();
        break;
      case json::parse_event_t::object_end:
      case json::parse_event_t::array_end:
        frames.pop_back();
        advance();
        break;
    }
    return true;
  };
  try {
    return json::parse(TrackingIterator(text.data(), &last),
                       TrackingIterator(text.data() + text.size(), &last),
                       callback);
  } catch (const json::parse_error& e) {
    const size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw SchemaError(std::string("invalid JSON: ") + e.what(),
                      LineAt(text, byte), "");
  }
}

// Integral doubles print without a fraction when integers is set.
std::string Scalar(const ordered_json& v, bool integers) {
  if (integers && v.is_number_float()) {
    const double d = v.get<double>();
    if (std::isfinite(d) && std::abs(d) < 0x1.0p53 && d == std::floor(d)) {
      return std::to_string(static_cast<int64_t>(d));
    }
  }
  return v.dump();
}

void Dump(const ordered_json& j, int indent, bool integers, std::string& out) {
  const auto scalar = [](const ordered_json& v) { return !v.is_structured(); };
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out.append(indent + 2, ' ');
      out += ordered_json(key).dump() + ": ";
      Dump(value, indent + 2, integers, out);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out.append(indent, ' ');
    out += "}";
  } else if (j.is_array() && !j.empty() &&
             !std::all_of(j.begin(), j.end(), scalar)) {
    out += "[\n";
    for (size_t i = 0; i < j.size(); ++i) {
      out.append(indent + 2, ' ');
      Dump(j[i], indent + 2, integers, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out.append(indent, ' ');
    out += "]";
  } else if (j.is_array()) {
    out += "[";
    for (size_t i = 0; i < j.size(); ++i) {
      if (i > 0) out += ", ";
      out += Scalar(j[i], integers);
    }
    out += "]";
  } else {
    out += Scalar(j, integers);
  }
}

}  // namespace

std::string DumpJson(const ordered_json& j, bool integral_floats_as_ints) {
  std::string out;
  Dump(j, 0, integral_floats_as_ints, out);
  return out;
}

SchemaError::SchemaError(const std::string& what, int line,
                         std::string pointer)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": "
                                   : std::string()) +
                         (pointer.empty() ? std::string() : pointer + ": ") +
                         what),
      line_(line),
      pointer_(std::move(pointer)) {}

Instance MakeInstance(CoverageInstance inst, uint64_t seed) {
  const int n = inst.n;
  return {"coverage", n, seed, std::move(inst)};
}

Instance MakeInstance(FacilityLocationInstance inst, uint64_t seed) {
  const int n = inst.n();
  return {"facility", n, seed, std::move(inst)};
}

Instance MakeInstance(WeightedRankSumInstance inst, uint64_t seed) {
  const int n = inst.n;
  return {"wrs", n, seed, std::move(inst)};
}

Instance MakeInstance(MNatConcaveFn h, uint64_t seed) {
  const int n = h.n();
  return {"mnat", n, seed, std::move(h)};
}

Instance MakeInstance(TableInstance inst, uint64_t seed) {
  const int n = inst.n;
  return {"table", n, seed, std::move(inst)};
}

SetFunctionOracle InstanceFunction(const Instance& inst) {
  return std::visit(
      [](const auto& data) -> SetFunctionOracle {
        using T = std::decay_t<decltype(data)>;
        if constexpr (std::is_same_v<T, CoverageInstance>) {
          return CoverageFunction(data);
        } else if constexpr (std::is_same_v<T, FacilityLocationInstance>) {
          return FacilityFunction(data);
        } else if constexpr (std::is_same_v<T, WeightedRankSumInstance>) {
          return WrsFunction(data);
        } else if constexpr (std::is_same_v<T, MNatConcaveFn>) {
          return data.AsOracle("f");
        } else {
          return ValueTable::FromValues(data.n, data.values).AsOracle("f");
        }
      },
      inst.data);
}

ordered_json MatroidToJson(const Matroid& m) {
  ordered_json out;
  switch (m.kind()) {
    case Matroid::Kind::kUniform:
      out["type"] = "uniform";
      out["rank"] = m.uniform_rank();
      break;
    case Matroid::Kind::kPartition:
      out["type"] = "partition";
      out["blocks"] = SubsetsJson(m.blocks());
      out["capacities"] = m.capacities();
      break;
    case Matroid::Kind::kCustom:
      throw PreconditionError("a rank-oracle matroid cannot be serialized");
  }
  return out;
}

ordered_json MNatToJson(const MNatConcaveFn& h) {
  ordered_json out;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LaminarConcave>) {
          out["type"] = "laminar";
          out["sets"] = SubsetsJson(v.family.sets);
          out["phi"] = v.family.phi;
        } else if constexpr (std::is_same_v<T, WeightedMatroidRank>) {
          out["type"] = "weighted_rank";
          out["matroid"] = MatroidToJson(v.matroid);
          out["weights"] = v.weights;
        } else if constexpr (std::is_same_v<T, QuadraticMNat>) {
          out["type"] = "quadratic";
          out["matrix"] = MatrixJson(v.a);
        } else {
          out["type"] = "modular_indicator";
          out["ell"] = v.ell;
          out["c0"] = v.c0;
        }
      },
      h.variant());
  return out;
}

ordered_json InstanceToJson(const Instance& inst) {
  ordered_json out;
  out["family"] = inst.family;
  out["n"] = inst.n;
  std::visit(
      [&](const auto& data) {
        using T = std::decay_t<decltype(data)>;
        if constexpr (std::is_same_v<T, CoverageInstance>) {
          out["sets"] = SubsetsJson(data.gamma);
        } else if constexpr (std::is_same_v<T, FacilityLocationInstance>) {
          out["weights"] = data.w;
        } else if constexpr (std::is_same_v<T, WeightedRankSumInstance>) {
          ordered_json matroids = ordered_json::array();
          for (const Matroid& m : data.matroids) {
            matroids.push_back(MatroidToJson(m));
          }
          out["matroids"] = std::move(matroids);
          out["weights"] = data.weights;
          if (!data.coefficients.empty()) {
            out["coefficients"] = data.coefficients;
          }
        } else if constexpr (std::is_same_v<T, MNatConcaveFn>) {
          out["h"] = MNatToJson(data);
        } else {
          out["values"] = data.values;
        }
      },
      inst.data);
  out["seed"] = inst.seed;
  return out;
}

Matroid MatroidFromJson(const json& j, int n, const std::string& pointer) {
  const json& type = Need(j, "type", pointer);
  if (!type.is_string()) Fail(Child(pointer, "type"), "expected a string");
  const std::string kind = type.get<std::string>();
  if (kind == "uniform") {
    const std::string at = Child(pointer, "rank");
    const int rank = static_cast<int>(AsInt(Need(j, "rank", pointer), at));
    return Checked(at, [&] { return Matroid::Uniform(n, rank); });
  }
  if (kind == "partition") {
    const std::string at = Child(pointer, "blocks");
    std::vector<Subset> blocks = AsSubsets(Need(j, "blocks", pointer), n, at);
    const std::string cap_at = Child(pointer, "capacities");
    std::vector<int> caps = AsInts(Need(j, "capacities", pointer), cap_at);
    return Checked(at, [&] {
      return Matroid::Partition(n, std::move(blocks), std::move(caps));
    });
  }
  Fail(Child(pointer, "type"), "unknown matroid type \"" + kind + "\"");
}

MNatConcaveFn MNatFromJson(const json& j, int n, const std::string& pointer) {
  const json& type = Need(j, "type", pointer);
  if (!type.is_string()) Fail(Child(pointer, "type"), "expected a string");
  const std::string kind = type.get<std::string>();
  if (kind == "laminar") {
    LaminarFamily family;
    family.sets = AsSubsets(Need(j, "sets", pointer), n,
                            Child(pointer, "sets"));
    family.phi = AsMatrix(Need(j, "phi", pointer), Child(pointer, "phi"));
    return Checked(pointer, [&] {
      return MNatConcaveFn::Laminar(n, std::move(family));
    });
  }
  if (kind == "weighted_rank") {
    Matroid m = MatroidFromJson(Need(j, "matroid", pointer), n,
                                Child(pointer, "matroid"));
    const std::string at = Child(pointer, "weights");
    std::vector<double> w = AsDoubles(Need(j, "weights", pointer), at);
    return Checked(at, [&] {
      return MNatConcaveFn::WeightedRank(std::move(m), std::move(w));
    });
  }
  if (kind == "quadratic") {
    const std::string at = Child(pointer, "matrix");
    const auto rows = AsMatrix(Need(j, "matrix", pointer), at);
    if (static_cast<int>(rows.size()) != n) Fail(at, "expected n rows");
    SymmetricMatrix a(n);
    for (int r = 0; r < n; ++r) {
      if (static_cast<int>(rows[r].size()) != n) {
        Fail(Child(at, r), "expected n columns");
      }
      for (int c = r; c < n; ++c) {
        if (rows[r][c] != rows[c][r]) {
          Fail(Child(Child(at, r), c), "matrix is not symmetric");
        }
        a.Set(r, c, rows[r][c]);
      }
    }
    return Checked(at, [&] { return MNatConcaveFn::Quadratic(std::move(a)); });
  }
  if (kind == "modular_indicator") {
    const std::string at = Child(pointer, "ell");
    std::vector<double> ell = AsDoubles(Need(j, "ell", pointer), at);
    if (static_cast<int>(ell.size()) != n) Fail(at, "expected n entries");
    const double c0 =
        AsDouble(Need(j, "c0", pointer), Child(pointer, "c0"));
    return Checked(at, [&] {
      return MNatConcaveFn::ModularIndicator(std::move(ell), c0);
    });
  }
  Fail(Child(pointer, "type"), "unknown M-natural type \"" + kind + "\"");
}

Instance InstanceFromJson(const json& j) {
  const json& fam = Need(j, "family", "");
  if (!fam.is_string()) Fail("/family", "expected a string");
  Instance inst;
  inst.family = fam.get<std::string>();
  const int64_t n = AsInt(Need(j, "n", ""), "/n");
  if (n < 0 || n > kMaxGroundSize) Fail("/n", "n out of range");
  inst.n = static_cast<int>(n);
  if (const auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_integer()) Fail("/seed", "expected an integer");
    inst.seed = it->get<uint64_t>();
  }
  const int size = inst.n;
  if (inst.family == "coverage") {
    CoverageInstance data{size, AsSubsets(Need(j, "sets", ""), size, "/sets")};
    Checked("/sets", [&] {
      ValidateCoverage(data);
      return 0;
    });
    inst.data = std::move(data);
  } else if (inst.family == "facility") {
    FacilityLocationInstance data{AsMatrix(Need(j, "weights", ""), "/weights")};
    Checked("/weights", [&] {
      ValidateFacility(data);
      return 0;
    });
    if (data.n() != size) Fail("/weights", "row length differs from n");
    inst.data = std::move(data);
  } else if (inst.family == "wrs") {
    WeightedRankSumInstance data;
    data.n = size;
    const json& matroids = Need(j, "matroids", "");
    if (!matroids.is_array()) Fail("/matroids", "expected an array");
    for (size_t i = 0; i < matroids.size(); ++i) {
      data.matroids.push_back(
          MatroidFromJson(matroids[i], size, Child("/matroids", i)));
    }
    data.weights = AsMatrix(Need(j, "weights", ""), "/weights");
    if (const auto it = j.find("coefficients"); it != j.end()) {
      data.coefficients = AsDoubles(*it, "/coefficients");
    }
    Checked("/matroids", [&] {
      ValidateWrs(data);
      return 0;
    });
    inst.data = std::move(data);
  } else if (inst.family == "mnat") {
    inst.data = MNatFromJson(Need(j, "h", ""), size, "/h");
  } else if (inst.family == "table") {
    if (size > kMaxTableSize) Fail("/n", "n too large for a table");
    std::vector<double> values = AsDoubles(Need(j, "values", ""), "/values");
    if (values.size() != (size_t{1} << size)) {
      Fail("/values", "expected 2^n values");
    }
    inst.data = TableInstance{size, std::move(values)};
  } else {
    Fail("/family", "unknown family \"" + inst.family + "\"");
  }
  return inst;
}

std::string SerializeInstance(const Instance& inst) {
  return DumpJson(InstanceToJson(inst), true) + "\n";
}

Instance ParseInstance(std::string_view text) {
  std::map<std::string, int> lines;
  const json j = ParseWithLines(text, lines);
  try {
    return InstanceFromJson(j);
  } catch (const SchemaError& e) {
    // Walk up to the nearest pointer that was seen while parsing.
    std::string p = e.pointer();
    int line = 0;
    while (true) {
      if (const auto it = lines.find(p); it != lines.end()) {
        line = it->second;
        break;
      }
      if (p.empty()) break;
      p.erase(p.rfind('/'));
    }
    const std::string what = e.what();
    const std::string prefix = e.pointer().empty() ? "" : e.pointer() + ": ";
    throw SchemaError(what.substr(prefix.size()), line, e.pointer());
  }
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read " + path, 0, "");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

void SaveInstance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << SerializeInstance(inst);
}

std::vector<std::string> DecompositionMethods(std::string_view family) {
  std::vector<std::string> out{"trivial", "quadratic"};
  if (family != "table") out.push_back("family");
  if (family == "wrs") out.push_back("mixture");
  if (family == "mnat") out.push_back("identity");
  return out;
}

Decomposition DecomposeInstance(const Instance& inst, std::string_view method,
                                int cap) {
  const std::vector<std::string> allowed = DecompositionMethods(inst.family);
  if (std::find(allowed.begin(), allowed.end(), method) == allowed.end()) {
    throw PreconditionError("method \"" + std::string(method) +
                            "\" is not available for family \"" +
                            inst.family + "\"");
  }
  const SetFunctionOracle f = InstanceFunction(inst);
  if (method == "trivial") return TrivialCurvatureDecomposition(f, cap);
  if (method == "quadratic") {
    if (const auto* cov = std::get_if<CoverageInstance>(&inst.data)) {
      return CoverageDecomposition(*cov, cap);
    }
    return BuildQuadraticDecomposition(f, cap);
  }
  if (method == "mixture") {
    return MixtureDecompose(std::get<WeightedRankSumInstance>(inst.data), cap);
  }
  if (method == "identity") {
    return IdentityDecomposition(std::get<MNatConcaveFn>(inst.data), cap);
  }
  return std::visit(
      [&](const auto& data) -> Decomposition {
        using T = std::decay_t<decltype(data)>;
        if constexpr (std::is_same_v<T, CoverageInstance>) {
          return CoverageDecomposition(data, cap);
        } else if constexpr (std::is_same_v<T, FacilityLocationInstance>) {
          return FacilityDecompose(data, cap);
        } else if constexpr (std::is_same_v<T, WeightedRankSumInstance>) {
          return WrsDecompose(data, cap);
        } else if constexpr (std::is_same_v<T, MNatConcaveFn>) {
          return IdentityDecomposition(data, cap);
        } else {
          throw PreconditionError("table instances have no family method");
        }
      },
      inst.data);
}

}  // namespace hcurv
