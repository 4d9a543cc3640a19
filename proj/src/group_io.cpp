// Copyright 2026 The kdensity Authors.
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

#include "kdensity/group_io.hpp"

#include <fstream>

namespace kdensity {

GroupFile parse_group_file(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("group file: expected a JSON object");
  GroupFile f;
  f.name = j.value("name", std::string{});
  if (!j.contains("degree") || !j["degree"].is_number_unsigned())
    throw std::invalid_argument("group file: missing or invalid 'degree'");
  f.degree = j["degree"].get<std::size_t>();
  if (f.degree == 0 || f.degree > 0xFFFF) throw std::invalid_argument("group file: degree out of range");
  const int base = j.value("base", 0);
  if (base != 0 && base != 1) throw std::invalid_argument("group file: 'base' must be 0 or 1");
  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
    throw std::invalid_argument("group file: 'generators' must be a nonempty array");
  for (const auto& g : j["generators"]) {
    if (g.is_string()) {
      f.generators.push_back(Perm::from_cycles(g.get<std::string>(), f.degree));
      continue;
    }
    if (!g.is_array() || g.size() != f.degree)
      throw std::invalid_argument("group file: generator image array has wrong length");
    std::vector<Point> img;
    for (const auto& v : g) {
      const long long x = v.get<long long>() - base;
      if (x < 0 || x >= static_cast<long long>(f.degree))
        throw std::invalid_argument("group file: image out of range");
      img.push_back(static_cast<Point>(x));
    }
    f.generators.emplace_back(std::move(img));
  }
  if (j.contains("annotations")) {
    for (const auto& [key, value] : j["annotations"].items())
      f.annotations[key] = value.is_string() ? value.get<std::string>() : value.dump();
  }
  return f;
}

GroupFile read_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("group file " + path.string() + ": " + e.what());
  }
  return parse_group_file(j);
}

nlohmann::json to_json(const GroupFile& file) {
  nlohmann::json j;
  j["name"] = file.name;
  j["degree"] = file.degree;
  j["base"] = 0;
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : file.generators) {
    nlohmann::json img = nlohmann::json::array();
    for (Point v : g.images()) img.push_back(v);
    gens.push_back(img);
  }
  j["generators"] = gens;
  if (!file.annotations.empty()) j["annotations"] = file.annotations;
  return j;
}

GroupFile group_file_of(const Group& g) {
  GroupFile f;
  f.name = g.name();
  f.degree = g.degree();
  f.generators.assign(g.generators().begin(), g.generators().end());
  f.annotations = g.tags();
  return f;
}

Group materialize(const GroupFile& file, std::size_t cap) {
  Group g = group_closure(file.generators, file.name, cap);
  for (const auto& [k, v] : file.annotations) g.set_tag(k, v);
  return g;
}

}  // namespace kdensity
