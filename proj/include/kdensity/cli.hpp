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

#ifndef KDENSITY_CLI_HPP_
#define KDENSITY_CLI_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace kdensity::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
  std::string subcommand;
  std::optional<int> q;
  std::size_t k = 3;
  std::string group;  // pgl2, psl2, psl-sigma
  std::string group_file;
  std::optional<std::string> orbit;
  std::optional<std::string> subgroup;
  std::string method = "all";  // all, bounds, search, construct
  double time_limit = 300;
  unsigned threads = 1;
  std::string format = "json";  // json, csv, markdown
  std::string catalog;
  std::vector<std::string> cases;
  bool deterministic = false;
};

// KDENSITY_THREADS, else the hardware concurrency.
unsigned default_threads();

// Exit code: 0 ok, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace kdensity::cli

#endif  // KDENSITY_CLI_HPP_
