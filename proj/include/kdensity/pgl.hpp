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

// PGL(2,q), PSL(2,q) and relatives as permutation groups on the projective
// line. Point i < q is the class of (1, y) with y the field element of code i;
// point q is the class of (0, 1). Matrices act on column vectors.

#ifndef KDENSITY_PGL_HPP_
#define KDENSITY_PGL_HPP_

#include <array>
#include <string>
#include <vector>

#include "kdensity/gf.hpp"
#include "kdensity/perm.hpp"

namespace kdensity::pgl {

class ProjLine {
 public:
  explicit ProjLine(gf::FieldSpec spec);

  const gf::FieldSpec& field() const { return spec_; }
  std::size_t size() const { return static_cast<std::size_t>(spec_.q) + 1; }
  // Canonical homogeneous coordinates of point i.
  std::array<gf::FieldElement, 2> coords(std::size_t i) const;
  // Index of the class of (u1, u2); throws on the zero vector.
  std::size_t index_of(const gf::FieldElement& u1, const gf::FieldElement& u2) const;

 private:
  gf::FieldSpec spec_;
};

struct ProjMatrix {
  gf::FieldElement a, b, c, d;
};

gf::FieldElement determinant(const gf::FieldSpec& f, const ProjMatrix& m);

// Throws std::invalid_argument on a singular matrix.
Perm matrix_permutation(const ProjLine& line, const ProjMatrix& m);

// [x:y] -> [x^(p^j) : y^(p^j)].
Perm frobenius_permutation(const ProjLine& line, int j);

// Validates q (prime power, q >= 4) and returns its line.
ProjLine line_for(int q);

Group build_pgl2(int q);
Group build_psl2(int q);
// PSL(2,q) extended by [x:y] -> diag(g,1)[x^(p^(k/2)) : y^(p^(k/2))], g the
// least primitive element. Needs p odd, k even.
Group build_psl_sigma(int q);

enum class SubgroupKind { unipotent, unipotent_c3, unipotent_pm, a4, a5 };

SubgroupKind parse_subgroup_kind(const std::string& text);
std::string to_string(SubgroupKind kind);
// Whether q meets the congruence the construction needs.
bool subgroup_applicable(SubgroupKind kind, int q);

// Throws std::invalid_argument when the congruence on q fails and
// std::logic_error when an A4/A5 search finds no witness.
Group build_named_subgroup(SubgroupKind kind, int q);

enum class TripleSign { square, nonsquare };

std::string to_string(TripleSign s);

// Square class of D(u,v)D(v,w)D(w,u), D(u,v) = u1 v2 - u2 v1. Needs q odd
// and pairwise distinct points.
TripleSign triple_sign(const ProjLine& line, std::size_t u, std::size_t v, std::size_t w);

}  // namespace kdensity::pgl

#endif  // KDENSITY_PGL_HPP_
