// Copyright 2026 The fuzzyica Authors
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

#include "fuzzyica/instance_io.h"

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fuzzyica {
namespace {

using nlohmann::json;

std::string LineColumn(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const json& Field(const json& object, const char* key, const std::string& path) {
  if (!object.is_object()) {
    throw ValidationError(path + " must be an object");
  }
  auto it = object.find(key);
  if (it == object.end()) {
    throw ValidationError("missing field '" + path + "." + key + "'");
  }
  return *it;
}

double Number(const json& object, const char* key, const std::string& path) {
  const json& v = Field(object, key, path);
  if (!v.is_number()) {
    throw ValidationError("field '" + path + "." + key + "' must be a number");
  }
  return v.get<double>();
}

FuzzyRandomReturn ReadReturn(const json& object, const std::string& path) {
  FuzzyRandomReturn r;
  r.r0 = Number(object, "r0", path);
  r.r1 = Number(object, "r1", path);
  r.r2 = Number(object, "r2", path);
  r.beta = Number(object, "beta", path);
  r.gamma = Number(object, "gamma", path);
  return r;
}

nlohmann::ordered_json WriteReturn(const FuzzyRandomReturn& r) {
  return nlohmann::ordered_json{{"r0", r.r0},
              {"r1", r.r1},
              {"r2", r.r2},
              {"beta", r.beta},
              {"gamma", r.gamma}};
}

ReferenceFunction ReadReference(const json& object) {
  const json& kind = Field(object, "kind", "reference");
  if (kind == "linear") return ReferenceFunction::Linear();
  if (kind == "power") {
    const double exponent = Number(object, "exponent", "reference");
    if (!(exponent > 0.0)) {
      throw ValidationError("reference.exponent must be positive");
    }
    return ReferenceFunction::Power(exponent);
  }
  throw ValidationError("reference.kind must be \"linear\" or \"power\"");
}

}  // namespace

PortfolioInstance ParseInstance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("instance parse error at " + LineColumn(text, e.byte) +
                     ": " + e.what());
  }
  if (!doc.is_object()) throw ValidationError("instance must be a JSON object");

  PortfolioInstance instance;
  const json& assets = Field(doc, "assets", "instance");
  if (!assets.is_array()) throw ValidationError("'assets' must be an array");
  for (std::size_t j = 0; j < assets.size(); ++j) {
    instance.assets.push_back(
        ReadReturn(assets[j], "assets[" + std::to_string(j) + "]"));
  }
  instance.target = ReadReturn(Field(doc, "target", "instance"), "target");
  instance.total_fund = Number(doc, "total_fund", "instance");

  const json& bounds = Field(doc, "upper_bounds", "instance");
  if (!bounds.is_array()) {
    throw ValidationError("'upper_bounds' must be an array");
  }
  for (const json& b : bounds) {
    if (!b.is_number()) {
      throw ValidationError("'upper_bounds' entries must be numbers");
    }
    instance.upper_bounds.push_back(b.get<double>());
  }
  const json& factor = Field(doc, "factor", "instance");
  instance.factor.mean = Number(factor, "mean", "factor");
  instance.factor.std_dev = Number(factor, "std_dev", "factor");
  if (auto it = doc.find("reference"); it != doc.end()) {
    instance.shape = ReadReference(*it);
  }
  instance.Validate();
  return instance;
}

PortfolioInstance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open instance file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseInstance(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string WriteInstance(const PortfolioInstance& instance) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json assets = nlohmann::ordered_json::array();
  for (const FuzzyRandomReturn& r : instance.assets) {
    assets.push_back(WriteReturn(r));
  }
  doc["assets"] = std::move(assets);
  doc["target"] = WriteReturn(instance.target);
  doc["total_fund"] = instance.total_fund;
  doc["upper_bounds"] = instance.upper_bounds;
  doc["factor"] = {{"mean", instance.factor.mean},
                   {"std_dev", instance.factor.std_dev}};
  if (instance.shape.kind() == ReferenceFunction::Kind::kPower) {
    doc["reference"] = {{"kind", "power"},
                        {"exponent", instance.shape.exponent()}};
  }
  return doc.dump(2) + "\n";
}

PortfolioInstance PaperExampleInstance() {
  PortfolioInstance instance;
  instance.assets = {
      {1.30, 1.45, 0.6, 0.20, 0.20},
      {1.20, 1.25, 0.5, 0.15, 0.15},
      {1.35, 1.40, 0.5, 0.15, 0.15},
      {1.40, 1.50, 0.6, 0.25, 0.25},
      {1.45, 1.60, 0.6, 0.25, 0.25},
  };
  // 200 * (1.25 + 0.25 t, 1.25 + 0.25 t, 0.2, 0.2).
  instance.target = {250.0, 250.0, 50.0, 40.0, 40.0};
  instance.total_fund = 200.0;
  instance.upper_bounds.assign(5, 60.0);
  instance.factor = {0.0, 1.0};
  return instance;
}

}  // namespace fuzzyica
