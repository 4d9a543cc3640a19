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

// Registered verification cases: each runs the full pipeline for one
// known value and compares.

#ifndef KDENSITY_CASES_HPP_
#define KDENSITY_CASES_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "kdensity/density.hpp"

namespace kdensity {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CaseResult {
  std::string id;
  std::string title;
  std::vector<Check> checks;
  std::vector<DensityReport> reports;
  std::vector<DensityArray> arrays;
  nlohmann::json artifacts = nlohmann::json::object();
  std::vector<std::string> notes;
  double elapsed = 0;

  bool passed() const;
};

std::vector<std::string> case_ids();
bool has_case(const std::string& id);

// Throws std::invalid_argument for an unknown id.
CaseResult run_case(const std::string& id, const DensityOptions& opts = {});

// Independent cases on up to `workers` threads; results in input order.
std::vector<CaseResult> run_cases(const std::vector<std::string>& ids, const DensityOptions& opts,
                                  unsigned workers);

nlohmann::json to_json(const CaseResult& c, bool with_timing);

// Single-orbit rows (cases table4-*): q, max set, PSL density, PGL density.
std::string orbit_table_csv(const std::vector<CaseResult>& results);
std::string orbit_table_markdown(const std::vector<CaseResult>& results);

// The 15 permutations on one orbit of 3-sets of PSL(2,9), 1-indexed cycles.
const std::vector<std::string>& example15_cycles();

}  // namespace kdensity

#endif  // KDENSITY_CASES_HPP_
