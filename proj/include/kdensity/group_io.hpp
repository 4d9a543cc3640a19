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

// Group generator files:
//
//   { "name": "AGL(1,8)", "degree": 8,
//     "generators": [[1,2,3,4,5,6,7,0], "(1,2)(3,4)"],
//     "base": 0,
//     "annotations": { "known_density": "1/1", "source": "..." } }
//
// Image arrays use the point base given by "base" (default 0); cycle strings
// are always 1-indexed.

#ifndef KDENSITY_GROUP_IO_HPP_
#define KDENSITY_GROUP_IO_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "kdensity/perm.hpp"

namespace kdensity {

struct GroupFile {
  std::string name;
  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::map<std::string, std::string> annotations;
};

GroupFile parse_group_file(const nlohmann::json& j);
GroupFile read_group_file(const std::filesystem::path& path);

nlohmann::json to_json(const GroupFile& file);
GroupFile group_file_of(const Group& g);

// Closure of the generators with annotations copied into tags.
Group materialize(const GroupFile& file, std::size_t cap = Group::kDefaultCap);

}  // namespace kdensity

#endif  // KDENSITY_GROUP_IO_HPP_
