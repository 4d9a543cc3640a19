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

// Exact maximum clique by branch and bound with greedy colouring bounds, and
// maximum intersecting sets as cliques of the complement derangement graph.

#ifndef KDENSITY_SEARCH_HPP_
#define KDENSITY_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "kdensity/action.hpp"

namespace kdensity {

inline constexpr std::size_t kMaxGraphVertices = 32768;

// A graph with a materialized bitset adjacency. Vertex i carries label
// labels()[i], a group element index for Cayley-type graphs.
class GraphView {
 public:
  // Vertices u, v adjacent iff connection[u * v^-1] is set.
  static GraphView cayley(const Group& g, std::vector<std::size_t> vertices,
                          const std::vector<char>& connection);
  static GraphView from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t size() const { return labels_.size(); }
  std::size_t words() const { return words_; }
  const std::vector<std::size_t>& labels() const { return labels_; }
  bool adjacent(std::size_t u, std::size_t v) const {
    return (adj_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }
  const std::uint64_t* row(std::size_t u) const { return adj_.data() + u * words_; }
  std::size_t degree(std::size_t u) const;

 private:
  void init(std::size_t n);
  void connect(std::size_t u, std::size_t v);

  std::size_t words_ = 0;
  std::vector<std::size_t> labels_;
  std::vector<std::uint64_t> adj_;
};

struct CliqueOptions {
  double time_limit = 300;
  // Nonzero: relabel vertices by a shuffle with this seed before ordering.
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool deterministic = false;
  // Stop as soon as a clique of this size is found.
  std::optional<std::size_t> upper_bound;
  // Vertex positions of a known clique.
  std::vector<std::size_t> initial_clique;
};

struct CliqueResult {
  std::size_t size = 0;
  std::vector<std::size_t> certificate;  // labels, sorted
  bool optimal = false;
  bool optimal_by_bound = false;
  double elapsed = 0;
  std::uint64_t nodes = 0;
};

CliqueResult max_clique(const GraphView& gv, const CliqueOptions& opts = {});

// Non-derangements of the action other than the identity.
std::vector<std::size_t> identity_neighbourhood(const DerangementData& der);

// 1 + max clique on the identity's neighbourhood in the complement
// derangement graph. The certificate contains the identity (index 0).
// `initial` (element indices) must contain the identity when given.
CliqueResult max_intersecting_set(const Action& a, const DerangementData& der,
                                  CliqueOptions opts = {},
                                  const std::vector<std::size_t>& initial = {});

// The same without the neighbourhood reduction.
CliqueResult max_intersecting_set_unreduced(const Action& a, const DerangementData& der,
                                            CliqueOptions opts = {});

// Greedy intersecting set grown from the identity.
std::vector<std::size_t> greedy_intersecting_set(const Action& a, const DerangementData& der);

nlohmann::json to_json(const CliqueResult& r, const Group& g, bool with_timing);

}  // namespace kdensity

#endif  // KDENSITY_SEARCH_HPP_
