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

#include <stdexcept>

#include "doctest.h"
#include "kdensity/group_io.hpp"
#include "kdensity/pgl.hpp"

using namespace kdensity;
using nlohmann::json;

TEST_SUITE("group_io") {
  TEST_CASE("image arrays in both bases and cycle strings agree") {
    const json zero = json::parse(R"j({"name": "S3", "degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]})j");
    const json one = json::parse(R"j({"name": "S3", "degree": 3, "base": 1, "generators": [[2, 3, 1], [2, 1, 3]]})j");
    const json cycles = json::parse(R"j({"name": "S3", "degree": 3, "generators": ["(1,2,3)", "(1,2)"]})j");
    const GroupFile a = parse_group_file(zero), b = parse_group_file(one), c = parse_group_file(cycles);
    CHECK(a.generators == b.generators);
    CHECK(a.generators == c.generators);
    CHECK(materialize(a).order() == 6);
  }

  TEST_CASE("round trip keeps generators and tags") {
    const Group g = pgl::build_pgl2(5);
    const GroupFile f = parse_group_file(to_json(group_file_of(g)));
    CHECK(f.generators.size() == g.generators().size());
    const Group h = materialize(f);
    CHECK(h.order() == g.order());
    CHECK(h.tag("family") == g.tag("family"));
    for (const auto& x : h.elements()) CHECK(g.contains(x));
  }

  TEST_CASE("malformed files are rejected") {
    CHECK_THROWS_AS(parse_group_file(json::array()), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_file(json::parse(R"j({"degree": 3})j")), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_file(json::parse(R"j({"degree": 3, "generators": [[0, 1]]})j")), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_file(json::parse(R"j({"degree": 3, "generators": [[0, 1, 3]]})j")), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_file(json::parse(R"j({"degree": 3, "generators": [[0, 0, 1]]})j")), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_file(json::parse(R"j({"degree": 3, "base": 2, "generators": [[0, 1, 2]]})j")),
                    std::invalid_argument);
    CHECK_THROWS_AS(read_group_file("/nonexistent/group.json"), std::invalid_argument);
  }

  TEST_CASE("annotations") {
    const json j = json::parse(
        R"j({"degree": 2, "generators": [[1, 0]], "annotations": {"known_density": "1/1", "source": "literature"}})j");
    const GroupFile f = parse_group_file(j);
    CHECK(f.annotations.at("known_density") == "1/1");
    CHECK(f.annotations.at("source") == "literature");
  }
}
