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

// Upper bounds on cocliques and cliques of graphs in the conjugacy class
// scheme: the weighted ratio bound and the LP clique bound.

#ifndef KDENSITY_BOUNDS_HPP_
#define KDENSITY_BOUNDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kdensity/rational.hpp"
#include "kdensity/scheme.hpp"

namespace kdensity {

// Per-class weights, indexed like the classes of the table.
struct Weighting {
  std::vector<Rational> w;
};

Weighting unit_weighting(const EigenTable& et, const ClassSelection& t);

enum class BoundKind { ratio, lp, trivial };

struct BoundResult {
  BoundKind kind = BoundKind::ratio;
  std::string method;
  bool vacuous = false;
  bool exact = true;  // value is an exact rational, else a float estimate
  std::optional<Rational> value;
  double approx = 0;
  std::optional<std::int64_t> floored;

  // Ratio bound.
  std::optional<Rational> d, tau;
  double d_approx = 0, tau_approx = 0;
  std::vector<Rational> weights;

  // LP bound: one variable per block of classes.
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<Rational> optimizer;
  std::vector<double> optimizer_approx;
  std::vector<std::size_t> binding_rows;
};

// Variables of the LPs: the rational classes met by a selection, with the
// summed row values over each block.
struct BlockSystem {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_sizes;
  std::vector<std::vector<double>> approx;  // [row][block]
  std::optional<std::vector<std::vector<Rational>>> exact;
};

BlockSystem block_system(const EigenTable& et, const ClassSelection& t);

// |V| / (1 - d/tau) for the weighted union. Throws std::invalid_argument on
// an invalid or all-zero weighting; tau >= 0 gives a vacuous result.
BoundResult ratio_bound(const EigenTable& et, const ClassSelection& t, const Weighting& w,
                        std::size_t num_vertices, std::string method = "ratio");

// Weights (constant on blocks) minimizing the ratio bound, found by an LP.
BoundResult ratio_weight_search(const EigenTable& et, const ClassSelection& t,
                                std::size_t num_vertices);

// max 1 + sum x_b |b| subject to 1 + sum x_b omega_b(row) >= 0 on every row.
// Throws std::runtime_error when unbounded.
BoundResult clique_lp_bound(const EigenTable& et, const ClassSelection& t);

struct CocliqueBound {
  BoundResult best;
  std::vector<BoundResult> candidates;
};

// Cocliques of the union over `edges`: unit ratio bound, automatic weights,
// and the clique LP on the complementary classes. Ties keep the earlier
// method.
CocliqueBound coclique_bound(const EigenTable& et, const ClassSelection& edges,
                             std::size_t num_vertices);

nlohmann::json to_json(const BoundResult& b);

}  // namespace kdensity

#endif  // KDENSITY_BOUNDS_HPP_
