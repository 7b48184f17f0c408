// Copyright 2026 The selgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "selgame/distribution_json.h"

#include <cmath>
#include <vector>

#include "selgame/errors.h"
#include "selgame/rational.h"

namespace selgame {
namespace {

using nlohmann::json;

const json& Field(const json& obj, const std::string& key,
                  const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) {
    Fail(ErrorCode::kValidation, path + key + ": missing field");
  }
  return obj.at(key);
}

// Returns the value and, for string input, its exact spelling.
double Number(const json& v, const std::string& path, std::string* exact) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      const double x = RationalToDouble(ParseRational(s));
      if (exact) *exact = s;
      return x;
    } catch (const Error&) {
      Fail(ErrorCode::kValidation, path + ": cannot parse '" + s + "'");
    }
  }
  Fail(ErrorCode::kValidation, path + ": expected a number");
}

std::vector<Atom> ParseAtoms(const json& spec, const std::string& path) {
  const json& arr = Field(spec, "atoms", path);
  if (!arr.is_array() || arr.empty()) {
    Fail(ErrorCode::kValidation, path + "atoms: expected a non-empty array");
  }
  std::vector<Atom> atoms;
  for (size_t i = 0; i < arr.size(); ++i) {
    const std::string where = path + "atoms[" + std::to_string(i) + "]";
    Atom a;
    a.x = Number(Field(arr[i], "x", where + "."), where + ".x", &a.exact_x);
    a.p = Number(Field(arr[i], "p", where + "."), where + ".p", &a.exact_p);
    atoms.push_back(std::move(a));
  }
  return atoms;
}

Distribution Parse(const json& spec, const std::string& path) {
  if (!spec.is_object()) Fail(ErrorCode::kValidation, path + ": expected an object");
  const json& type = Field(spec, "type", path);
  if (!type.is_string()) Fail(ErrorCode::kValidation, path + "type: expected a string");
  const std::string t = type.get<std::string>();
  if (t == "uniform") return Distribution::Uniform();
  if (t == "discrete") return Distribution::Discrete(ParseAtoms(spec, path));
  if (t == "mixture") {
    const double eta = Number(Field(spec, "eta", path), path + "eta", nullptr);
    if (!(eta >= 0.0 && eta <= 1.0)) {
      Fail(ErrorCode::kValidation, path + "eta: must lie in [0,1]");
    }
    const Distribution disc = Parse(Field(spec, "discrete", path), path + "discrete.");
    return Distribution::Mixture(eta, disc);
  }
  if (t == "piecewise_poly") {
    const json& arr = Field(spec, "pieces", path);
    if (!arr.is_array() || arr.empty()) {
      Fail(ErrorCode::kValidation, path + "pieces: expected a non-empty array");
    }
    std::vector<DensityPiece> pieces;
    for (size_t i = 0; i < arr.size(); ++i) {
      const std::string where = path + "pieces[" + std::to_string(i) + "]";
      DensityPiece p;
      p.lo = Number(Field(arr[i], "lo", where + "."), where + ".lo", nullptr);
      p.hi = Number(Field(arr[i], "hi", where + "."), where + ".hi", nullptr);
      const json& coeffs = Field(arr[i], "coeffs", where + ".");
      if (!coeffs.is_array()) {
        Fail(ErrorCode::kValidation, where + ".coeffs: expected an array");
      }
      for (size_t k = 0; k < coeffs.size(); ++k) {
        p.coeffs.push_back(Number(coeffs[k], where + ".coeffs[" +
                                                 std::to_string(k) + "]",
                                  nullptr));
      }
      pieces.push_back(std::move(p));
    }
    std::vector<Atom> atoms;
    if (spec.contains("atoms")) atoms = ParseAtoms(spec, path);
    return Distribution::Make(std::move(atoms), std::move(pieces));
  }
  Fail(ErrorCode::kValidation, path + "type: unknown distribution type '" + t + "'");
}

}  // namespace

Distribution DistributionFromJson(const json& spec) { return Parse(spec, ""); }

Distribution DistributionFromText(const std::string& text) {
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text.compare(i, 7, "uniform") == 0 &&
      text.find_first_not_of(" \t\r\n", i + 7) == std::string::npos) {
    return Distribution::Uniform();
  }
  json spec;
  try {
    spec = json::parse(text);
  } catch (const json::parse_error& e) {
    Fail(ErrorCode::kValidation, std::string("distribution: invalid JSON: ") + e.what());
  }
  return DistributionFromJson(spec);
}

json DistributionToJson(const Distribution& d) {
  auto atoms = [&]() {
    json arr = json::array();
    for (const Atom& a : d.atoms()) {
      json x = a.exact_x.empty() ? json(a.x) : json(a.exact_x);
      json p = a.exact_p.empty() ? json(a.p) : json(a.exact_p);
      arr.push_back({{"x", x}, {"p", p}});
    }
    return arr;
  };
  if (d.is_standard_uniform()) return {{"type", "uniform"}};
  if (d.is_discrete()) return {{"type", "discrete"}, {"atoms", atoms()}};
  json pieces = json::array();
  for (const DensityPiece& p : d.pieces()) {
    pieces.push_back({{"lo", p.lo}, {"hi", p.hi}, {"coeffs", p.coeffs}});
  }
  json out = {{"type", "piecewise_poly"}, {"pieces", pieces}};
  if (!d.atoms().empty()) out["atoms"] = atoms();
  return out;
}

}  // namespace selgame
