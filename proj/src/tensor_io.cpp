// Copyright 2026 The hllab Authors.
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

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "hllab/tensor.hpp"

namespace hllab {

namespace {

nlohmann::json exponent_to_json(Exponent e) {
  if (e.is_infinite()) return "inf";
  return e.value();
}

Exponent exponent_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_exponent(j.get<std::string>());
  if (j.is_number()) return Exponent(j.get<double>());
  throw ValidationError("value_norm must be a number or a string");
}

}  // namespace

std::string to_json(const CoefficientTensor& t, int indent) {
  nlohmann::json j;
  j["dims"] = t.dims();
  j["value_dim"] = t.value_dim();
  j["value_norm"] = exponent_to_json(t.value_norm());
  j["entries"] = std::vector<double>(t.entries().begin(), t.entries().end());
  return j.dump(indent);
}

CoefficientTensor tensor_from_json(const std::string& text, std::size_t max_cells) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("tensor JSON does not parse: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("tensor JSON must be an object");
  for (const auto& [key, _] : j.items()) {
    if (key != "dims" && key != "value_dim" && key != "value_norm" && key != "entries" && key != "schema_version") {
      throw ValidationError("unknown tensor JSON key '" + key + "'");
    }
  }
  if (!j.contains("dims") || !j.contains("entries")) throw ValidationError("tensor JSON needs dims and entries");
  try {
    auto dims = j.at("dims").get<std::vector<std::size_t>>();
    const std::size_t value_dim = j.value("value_dim", std::size_t{1});
    const Exponent value_norm = j.contains("value_norm") ? exponent_from_json(j.at("value_norm")) : Exponent(2.0);
    auto entries = j.at("entries").get<std::vector<double>>();
    return CoefficientTensor(std::move(dims), value_dim, value_norm, std::move(entries), max_cells);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed tensor JSON: ") + e.what());
  }
}

CoefficientTensor load_tensor(const std::string& path, std::size_t max_cells) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open tensor file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return tensor_from_json(buf.str(), max_cells);
}

void save_tensor(const CoefficientTensor& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write tensor file '" + path + "'");
  out << to_json(t) << '\n';
}

}  // namespace hllab
