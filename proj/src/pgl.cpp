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

#include "kdensity/pgl.hpp"

#include <stdexcept>

namespace kdensity::pgl {

using gf::FieldElement;

ProjLine::ProjLine(gf::FieldSpec spec) : spec_(std::move(spec)) {}

std::array<FieldElement, 2> ProjLine::coords(std::size_t i) const {
  if (i > static_cast<std::size_t>(spec_.q)) throw std::out_of_range("ProjLine: point out of range");
  if (i == static_cast<std::size_t>(spec_.q)) return {gf::zero(spec_), gf::one(spec_)};
  return {gf::one(spec_), gf::from_code(spec_, static_cast<int>(i))};
}

std::size_t ProjLine::index_of(const FieldElement& u1, const FieldElement& u2) const {
  if (!gf::is_zero(u1)) {
    const FieldElement y = gf::mul(spec_, u2, gf::inv(spec_, u1));
    return static_cast<std::size_t>(gf::to_code(spec_, y));
  }
  if (gf::is_zero(u2)) throw std::invalid_argument("ProjLine: zero vector is not a point");
  return static_cast<std::size_t>(spec_.q);
}

FieldElement determinant(const gf::FieldSpec& f, const ProjMatrix& m) {
  return gf::sub(f, gf::mul(f, m.a, m.d), gf::mul(f, m.b, m.c));
}

Perm matrix_permutation(const ProjLine& line, const ProjMatrix& m) {
  const auto& f = line.field();
  if (gf::is_zero(determinant(f, m))) throw std::invalid_argument("matrix_permutation: singular matrix");
  std::vector<Point> img(line.size());
  for (std::size_t i = 0; i < line.size(); ++i) {
    const auto [u1, u2] = line.coords(i);
    const FieldElement v1 = gf::add(f, gf::mul(f, m.a, u1), gf::mul(f, m.b, u2));
    const FieldElement v2 = gf::add(f, gf::mul(f, m.c, u1), gf::mul(f, m.d, u2));
    img[i] = static_cast<Point>(line.index_of(v1, v2));
  }
  return Perm(std::move(img));
}

Perm frobenius_permutation(const ProjLine& line, int j) {
  const auto& f = line.field();
  std::vector<Point> img(line.size());
  for (std::size_t i = 0; i < line.size(); ++i) {
    const auto [u1, u2] = line.coords(i);
    img[i] = static_cast<Point>(
        line.index_of(gf::ff_frobenius(f, u1, j), gf::ff_frobenius(f, u2, j)));
  }
  return Perm(std::move(img));
}

ProjLine line_for(int q) {
  if (q < 4) throw std::invalid_argument("q must be at least 4");
  if (!gf::prime_power(q)) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return ProjLine(gf::ff_make_order(q));
}

namespace {

ProjMatrix upper(const gf::FieldSpec& f, const FieldElement& b) {
  return {gf::one(f), b, gf::zero(f), gf::one(f)};
}

ProjMatrix lower(const gf::FieldSpec& f, const FieldElement& c) {
  return {gf::one(f), gf::zero(f), c, gf::one(f)};
}

ProjMatrix diagonal(const gf::FieldSpec& f, const FieldElement& x, const FieldElement& y) {
  return {x, gf::zero(f), gf::zero(f), y};
}

// Additive basis 1, x, ..., x^(k-1) of the field.
std::vector<FieldElement> additive_basis(const gf::FieldSpec& f) {
  std::vector<FieldElement> out;
  for (int i = 0; i < f.k; ++i) {
    FieldElement e = gf::zero(f);
    e.coeffs[i] = 1;
    out.push_back(e);
  }
  return out;
}

std::vector<Perm> unipotent_generators(const ProjLine& line) {
  std::vector<Perm> gens;
  for (const auto& b : additive_basis(line.field()))
    gens.push_back(matrix_permutation(line, upper(line.field(), b)));
  return gens;
}

std::vector<Perm> psl_generators(const ProjLine& line) {
  std::vector<Perm> gens = unipotent_generators(line);
  for (const auto& c : additive_basis(line.field()))
    gens.push_back(matrix_permutation(line, lower(line.field(), c)));
  return gens;
}

std::size_t pgl_order(int q) {
  return static_cast<std::size_t>(q - 1) * q * (q + 1);
}

void tag_family(Group& g, const std::string& family, int q) {
  g.set_tag("family", family);
  g.set_tag("q", std::to_string(q));
}

void expect_order(const Group& g, std::size_t order) {
  if (g.order() != order)
    throw std::logic_error(g.name() + ": closure has order " + std::to_string(g.order()) +
                           ", expected " + std::to_string(order));
}

}  // namespace

Group build_pgl2(int q) {
  const ProjLine line = line_for(q);
  const auto& f = line.field();
  std::vector<Perm> gens = unipotent_generators(line);
  gens.push_back(matrix_permutation(line, diagonal(f, gf::primitive_element(f), gf::one(f))));
  gens.push_back(matrix_permutation(line, ProjMatrix{gf::zero(f), gf::one(f), gf::one(f), gf::zero(f)}));
  Group g = group_closure(std::move(gens), "PGL(2," + std::to_string(q) + ")");
  expect_order(g, pgl_order(q));
  tag_family(g, "pgl2", q);
  return g;
}

Group build_psl2(int q) {
  const ProjLine line = line_for(q);
  Group g = group_closure(psl_generators(line), "PSL(2," + std::to_string(q) + ")");
  expect_order(g, pgl_order(q) / (q % 2 == 0 ? 1 : 2));
  tag_family(g, "psl2", q);
  return g;
}

Group build_psl_sigma(int q) {
  const ProjLine line = line_for(q);
  const auto& f = line.field();
  if (f.p == 2 || f.k % 2 != 0)
    throw std::invalid_argument("PSL(2,q)<alpha tau^(k/2)> needs q = p^k with p odd and k even; got q = " +
                                std::to_string(q));
  const std::vector<Perm> psl = psl_generators(line);
  std::vector<Perm> gens = psl;
  const Perm twist = matrix_permutation(line, diagonal(f, gf::primitive_element(f), gf::one(f)));
  gens.push_back(twist * frobenius_permutation(line, f.k / 2));
  Group g = group_closure(std::move(gens), "PSL(2," + std::to_string(q) + ").<alpha tau^" +
                                               std::to_string(f.k / 2) + ">");
  expect_order(g, pgl_order(q));
  tag_family(g, "psl-sigma", q);
  return g;
}

SubgroupKind parse_subgroup_kind(const std::string& text) {
  if (text == "unipotent") return SubgroupKind::unipotent;
  if (text == "unipotent_c3") return SubgroupKind::unipotent_c3;
  if (text == "unipotent_pm") return SubgroupKind::unipotent_pm;
  if (text == "a4") return SubgroupKind::a4;
  if (text == "a5") return SubgroupKind::a5;
  throw std::invalid_argument("unknown subgroup kind '" + text + "'");
}

std::string to_string(SubgroupKind kind) {
  switch (kind) {
    case SubgroupKind::unipotent: return "unipotent";
    case SubgroupKind::unipotent_c3: return "unipotent_c3";
    case SubgroupKind::unipotent_pm: return "unipotent_pm";
    case SubgroupKind::a4: return "a4";
    case SubgroupKind::a5: return "a5";
  }
  return "?";
}

bool subgroup_applicable(SubgroupKind kind, int q) {
  const auto pk = gf::prime_power(q);
  if (!pk || q < 4) return false;
  const auto [p, k] = *pk;
  switch (kind) {
    case SubgroupKind::unipotent: return true;
    case SubgroupKind::unipotent_c3: return p == 2 && k % 2 == 0;
    case SubgroupKind::unipotent_pm: return p == 3 && k % 2 == 0;
    case SubgroupKind::a4: return p != 2;
    case SubgroupKind::a5: return (static_cast<long long>(q) * q) % 5 == 1;
  }
  return false;
}

namespace {

// First pair (r, t) in canonical order with r^3 = t^2 = (rt)^m = 1 that
// generates a group of the expected order.
Group presentation_search(const Group& parent, std::size_t m, std::size_t expected,
                          const std::string& name) {
  const auto elems = parent.elements();
  for (const Perm& r : elems) {
    if (r.order() != 3) continue;
    for (const Perm& t : elems) {
      if (t.order() != 2) continue;
      if (!power(r * t, static_cast<std::int64_t>(m)).is_identity()) continue;
      Group h = subgroup(parent, {r, t}, name);
      if (h.order() == expected) return h;
    }
  }
  throw std::logic_error(name + ": presentation search found no witness in " + parent.name());
}

}  // namespace

Group build_named_subgroup(SubgroupKind kind, int q) {
  if (!subgroup_applicable(kind, q))
    throw std::invalid_argument("subgroup '" + to_string(kind) + "' does not apply to q = " + std::to_string(q));
  const ProjLine line = line_for(q);
  const auto& f = line.field();
  const std::string suffix = " in PSL(2," + std::to_string(q) + ")";
  Group h;
  switch (kind) {
    case SubgroupKind::unipotent:
      h = group_closure(unipotent_generators(line), "unipotent" + suffix);
      expect_order(h, static_cast<std::size_t>(q));
      break;
    case SubgroupKind::unipotent_c3: {
      std::vector<Perm> gens = unipotent_generators(line);
      const FieldElement w = gf::pow(f, gf::primitive_element(f), (q - 1) / 3);
      gens.push_back(matrix_permutation(line, diagonal(f, w, gf::mul(f, w, w))));
      h = group_closure(std::move(gens), "unipotent.C3" + suffix);
      expect_order(h, 3 * static_cast<std::size_t>(q));
      break;
    }
    case SubgroupKind::unipotent_pm: {
      std::vector<Perm> gens = unipotent_generators(line);
      gens.push_back(matrix_permutation(line, diagonal(f, gf::one(f), gf::neg(f, gf::one(f)))));
      h = group_closure(std::move(gens), "unipotent.C2" + suffix);
      expect_order(h, 2 * static_cast<std::size_t>(q));
      break;
    }
    case SubgroupKind::a4:
      h = presentation_search(build_psl2(q), 3, 12, "Alt(4)" + suffix);
      break;
    case SubgroupKind::a5:
      h = presentation_search(build_psl2(q), 5, 60, "Alt(5)" + suffix);
      break;
  }
  h.set_tag("subgroup", to_string(kind));
  h.set_tag("q", std::to_string(q));
  return h;
}

std::string to_string(TripleSign s) {
  return s == TripleSign::square ? "square" : "nonsquare";
}

TripleSign triple_sign(const ProjLine& line, std::size_t u, std::size_t v, std::size_t w) {
  const auto& f = line.field();
  if (f.p == 2) throw std::invalid_argument("triple_sign: q must be odd");
  if (u == v || v == w || u == w) throw std::invalid_argument("triple_sign: points must be distinct");
  auto det = [&](std::size_t a, std::size_t b) {
    const auto x = line.coords(a);
    const auto y = line.coords(b);
    return gf::sub(f, gf::mul(f, x[0], y[1]), gf::mul(f, x[1], y[0]));
  };
  const FieldElement d = gf::mul(f, gf::mul(f, det(u, v), det(v, w)), det(w, u));
  return gf::ff_is_square(f, d) ? TripleSign::square : TripleSign::nonsquare;
}

}  // namespace kdensity::pgl
