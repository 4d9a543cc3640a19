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

// Intersection densities: constructions, bounds and exact search put
// together, plus density arrays over group catalogs.

#ifndef KDENSITY_DENSITY_HPP_
#define KDENSITY_DENSITY_HPP_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kdensity/action.hpp"
#include "kdensity/bounds.hpp"
#include "kdensity/rational.hpp"
#include "kdensity/search.hpp"

namespace kdensity {

// "pgl2", "psl2" or "psl-sigma".
Group build_builtin(const std::string& kind, int q);

// The action on k-sets, restricted to an orbit when `orbit` is given
// ("square", "nonsquare" or an orbit index). Throws std::invalid_argument
// when the result is not transitive.
Action select_action(std::shared_ptr<const Group> g, std::size_t k,
                     const std::optional<std::string>& orbit = std::nullopt);

struct DensityOptions {
  bool constructions = true;
  bool bounds = true;
  bool search = true;
  double time_limit = 300;
  unsigned threads = 1;
  bool deterministic = false;
};

struct Construction {
  std::string name;
  std::vector<std::size_t> elements;  // element indices, containing the identity
  bool verified = false;
};

struct DensityReport {
  std::string case_id;
  std::string group_name;
  std::map<std::string, std::string> group_tags;
  std::size_t order = 0;
  std::size_t degree = 0;
  std::string action;
  std::size_t n = 0;  // domain size
  std::size_t stabilizer = 0;
  std::size_t derangements = 0;
  std::size_t neighbourhood = 0;

  std::vector<Construction> constructions;
  std::optional<std::size_t> best_construction;
  std::optional<CocliqueBound> bounds;
  std::optional<CliqueResult> exact;

  std::size_t lower = 0;
  std::int64_t upper = 0;
  Rational rho;  // lower * n / order
  Rational rho_upper;
  std::string status;  // "exact" or "interval"
  std::string provenance = "computed";
  std::vector<std::string> notes;
};

Rational density_of(std::size_t set_size, std::size_t n, std::size_t order);

DensityReport compute_density(const Action& a, const DensityOptions& opts = {});

nlohmann::json to_json(const DensityReport& r, bool with_timing);

struct CatalogGroup {
  std::string name;
  std::shared_ptr<const Group> group;    // null for annotated entries
  std::vector<Perm> generators;          // always present
  std::size_t degree = 0;
  std::optional<Rational> known_density;  // annotated entries
  std::string source;
};

struct Catalog {
  std::string name;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<CatalogGroup> groups;
};

// Manifest: {"name": "K(8,3)", "n": 8, "k": 3, "groups": [{"builtin": "psl2",
// "q": 7}, {"file": "agl_1_8.json"}]}. Files resolve relative to the manifest.
Catalog load_catalog(const std::filesystem::path& manifest);

struct ArrayEntry {
  Rational value;
  std::vector<std::string> witnesses;
  std::vector<std::string> provenance;  // per witness
};

struct DensityArray {
  std::string name;
  std::vector<ArrayEntry> entries;  // increasing
  std::vector<DensityReport> reports;
  bool complete = true;  // false when some computed entry is not exact
};

DensityArray density_array(const Catalog& catalog, const DensityOptions& opts = {});

nlohmann::json to_json(const DensityArray& a, bool with_timing);

std::string reports_to_csv(const std::vector<DensityReport>& reports);
std::string reports_to_markdown(const std::vector<DensityReport>& reports);
std::string arrays_to_csv(const std::vector<DensityArray>& arrays);
std::string arrays_to_markdown(const std::vector<DensityArray>& arrays);

// "[1, 4/3]"
std::string format_array(const DensityArray& a);
// "4/3" for non-integers, "2" for integers.
std::string short_rational(const Rational& r);

std::filesystem::path data_dir();

}  // namespace kdensity

#endif  // KDENSITY_DENSITY_HPP_
