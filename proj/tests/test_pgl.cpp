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

#include <set>
#include <stdexcept>

#include "doctest.h"
#include "kdensity/action.hpp"
#include "kdensity/pgl.hpp"
#include "oracle.hpp"

using namespace kdensity;
using namespace kdensity::pgl;

namespace {

std::size_t pgl_order(std::size_t q) { return (q - 1) * q * (q + 1); }

}  // namespace

TEST_SUITE("pgl") {
  TEST_CASE("orders and degrees") {
    const Group g4 = build_pgl2(4);
    CHECK(g4.order() == 60);
    CHECK(g4.degree() == 5);
    CHECK(build_pgl2(9).order() == 720);
    CHECK(build_psl2(9).order() == 360);
    CHECK(build_psl2(7).order() == 168);
    const Group g8 = build_pgl2(8), s8 = build_psl2(8);
    CHECK(g8.order() == 504);
    CHECK(g8.degree() == 9);
    CHECK(std::equal(g8.elements().begin(), g8.elements().end(), s8.elements().begin(), s8.elements().end()));
    CHECK_THROWS_AS(build_pgl2(6), std::invalid_argument);
    CHECK_THROWS_AS(build_pgl2(3), std::invalid_argument);
  }

  TEST_CASE("PSL inside PGL with index gcd(2, q-1)") {
    for (std::size_t q : {4, 5, 7, 8, 9, 11, 13, 16}) {
      const Group g = build_pgl2(static_cast<int>(q)), s = build_psl2(static_cast<int>(q));
      CHECK(g.order() == pgl_order(q));
      CHECK(g.order() == s.order() * gcd(2, q - 1));
      for (const auto& x : s.elements()) CHECK(g.contains(x));
    }
  }

  TEST_CASE("PGL(2,q) is sharply 3-transitive") {
    for (int q : {4, 5, 7, 8, 9, 11, 13, 16}) {
      const Group g = build_pgl2(q);
      std::set<std::array<Point, 3>> images;
      for (const auto& x : g.elements()) images.insert({x(0), x(1), x(2)});
      const std::size_t n = static_cast<std::size_t>(q) + 1;
      CHECK(images.size() == g.order());
      CHECK(images.size() == n * (n - 1) * (n - 2));
    }
  }

  TEST_CASE("PSL(2,q) with the twisted extension") {
    const Group g = build_psl_sigma(9);
    CHECK(g.order() == 720);
    CHECK(induce_ksets(g, 3).transitive());
    CHECK(action_orbits(induce_ksets(g, 3)).front().size() == 120);
    CHECK(build_psl_sigma(25).order() == 15600);
    CHECK_THROWS_AS(build_psl_sigma(27), std::invalid_argument);
    CHECK_THROWS_AS(build_psl_sigma(8), std::invalid_argument);
    // Neither PGL(2,9) (order 10 elements) nor the field automorphism extension (no order 8).
    bool order8 = false, order10 = false;
    for (const auto& x : g.elements()) {
      order8 |= x.order() == 8;
      order10 |= x.order() == 10;
    }
    CHECK(order8);
    CHECK_FALSE(order10);
  }

  TEST_CASE("named subgroups") {
    struct Row {
      SubgroupKind kind;
      int q;
      std::size_t order;
      std::size_t k;
    };
    for (const Row r : {Row{SubgroupKind::unipotent, 27, 27, 3}, Row{SubgroupKind::unipotent_c3, 16, 48, 3},
                        Row{SubgroupKind::unipotent_pm, 9, 18, 3}, Row{SubgroupKind::a4, 13, 12, 3},
                        Row{SubgroupKind::a5, 19, 60, 0}, Row{SubgroupKind::a4, 7, 12, 2},
                        Row{SubgroupKind::a5, 31, 60, 2}}) {
      CAPTURE(to_string(r.kind));
      CAPTURE(r.q);
      const Group h = build_named_subgroup(r.kind, r.q);
      CHECK(h.order() == r.order);
      const Group parent = r.kind == SubgroupKind::unipotent_c3 || r.kind == SubgroupKind::unipotent_pm
                               ? build_pgl2(r.q)
                               : build_psl2(r.q);
      for (const auto& x : h.elements()) CHECK(parent.contains(x));
      if (r.k) {
        const auto domain = oracle::subsets(parent.degree(), r.k);
        for (const auto& x : h.elements()) CHECK(oracle::fixes_a_set(x, domain));
      }
    }
    CHECK_THROWS_AS(build_named_subgroup(SubgroupKind::a4, 8), std::invalid_argument);
    CHECK_THROWS_AS(build_named_subgroup(SubgroupKind::a5, 7), std::invalid_argument);
    CHECK(parse_subgroup_kind("a5") == SubgroupKind::a5);
    CHECK_THROWS(parse_subgroup_kind("a6"));
  }

  TEST_CASE("triple sign") {
    const ProjLine l13 = line_for(13);
    // (1,0), (1,1), (0,1): determinants 1, 1, -1; -1 = 12 is a square mod 13.
    CHECK(triple_sign(l13, 0, 1, 13) == TripleSign::square);
    CHECK(triple_sign(l13, 1, 0, 13) == TripleSign::square);
    const ProjLine l7 = line_for(7);
    CHECK(triple_sign(l7, 0, 1, 7) != triple_sign(l7, 1, 0, 7));
    CHECK_THROWS_AS(triple_sign(l13, 0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(triple_sign(line_for(8), 0, 1, 2), std::invalid_argument);
    for (int q : {5, 9, 13}) {
      const ProjLine line = line_for(q);
      const Group s = build_psl2(q);
      const auto n = static_cast<std::size_t>(q) + 1;
      for (std::size_t i = 0; i < s.order(); i += 3) {
        const Perm& x = s.element(i);
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = u + 1; v < n; ++v)
            for (std::size_t w = v + 1; w < n; w += 2)
              CHECK(triple_sign(line, x(static_cast<Point>(u)), x(static_cast<Point>(v)), x(static_cast<Point>(w))) ==
                    triple_sign(line, u, v, w));
      }
    }
  }

  TEST_CASE("projective line") {
    const ProjLine l = line_for(9);
    CHECK(l.size() == 10);
    for (std::size_t i = 0; i < l.size(); ++i) {
      const auto c = l.coords(i);
      CHECK(l.index_of(c[0], c[1]) == i);
      const auto f = l.field();
      const auto two = gf::from_int(f, 2);
      CHECK(l.index_of(gf::mul(f, two, c[0]), gf::mul(f, two, c[1])) == i);
    }
    CHECK_THROWS(l.index_of(gf::zero(l.field()), gf::zero(l.field())));
  }
}
