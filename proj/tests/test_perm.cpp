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

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "kdensity/action.hpp"
#include "kdensity/perm.hpp"
#include "kdensity/pgl.hpp"

using namespace kdensity;

namespace {

Perm cyc(const char* s, std::size_t n) { return Perm::from_cycles(s, n); }

// Closure by repeated multiplication until nothing new appears.
std::set<Perm> naive_closure(const std::vector<Perm>& gens) {
  std::set<Perm> all{Perm::identity(gens.front().degree())};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> cur(all.begin(), all.end());
    for (const auto& a : cur)
      for (const auto& g : gens) grew |= all.insert(a * g).second;
  }
  return all;
}

std::multiset<std::size_t> sizes_of(const ClassPartition& p) { return {p.sizes.begin(), p.sizes.end()}; }

}  // namespace

TEST_SUITE("perm") {
  TEST_CASE("construction and validation") {
    CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(cyc("(1,4)", 3), std::invalid_argument);
    CHECK_THROWS_AS(cyc("(1,2,1)", 3), std::invalid_argument);
    CHECK(cyc("()", 4).is_identity());
    const Perm g = cyc("(1,3)(2,4,5)", 6);
    CHECK(g.to_cycle_string() == "(1,3)(2,4,5)");
    CHECK(g.order() == 6);
    CHECK(g.fixed_point_count() == 1);
    CHECK(Perm::from_cycles(g.to_cycle_string(), 6) == g);
  }

  TEST_CASE("composition convention is g(h(v))") {
    const Perm g = cyc("(1,2)", 3), h = cyc("(2,3)", 3);
    CHECK(g * h == cyc("(1,2,3)", 3));
    for (Point v = 0; v < 3; ++v) CHECK((g * h)(v) == g(h(v)));
    CHECK((g * g.inverse()).is_identity());
    CHECK(Perm::identity(3) * h == h);
    CHECK(power(cyc("(1,2,3,4,5)", 5), 5).is_identity());
    CHECK(power(cyc("(1,2,3)", 3), -1) == cyc("(1,3,2)", 3));
  }

  TEST_CASE("closure orders against a naive closure") {
    const std::vector<Perm> s5{cyc("(1,2,3,4,5)", 5), cyc("(1,2)", 5)};
    CHECK(group_closure(s5).order() == 120);
    CHECK(naive_closure(s5).size() == 120);
    const std::vector<Perm> a4{cyc("(1,2,3)", 4), cyc("(2,3,4)", 4)};
    const Group g = group_closure(a4);
    CHECK(g.order() == 12);
    const auto naive = naive_closure(a4);
    CHECK(std::set<Perm>(g.elements().begin(), g.elements().end()) == naive);
    CHECK(pgl::build_pgl2(9).order() == 720);
    CHECK_THROWS_AS(group_closure(s5, "", 50), ClosureOverflow);
  }

  TEST_CASE("group invariants") {
    const Group g = pgl::build_psl2(7);
    CHECK(g.element(0).is_identity());
    CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
    for (std::size_t i = 0; i < g.order(); i += 7) {
      CHECK(g.element(g.inverse_index(i)) == g.element(i).inverse());
      for (std::size_t j = 0; j < g.order(); j += 11)
        CHECK(g.element(g.product_index(i, j)) == g.element(i) * g.element(j));
    }
    // Closing the element list again adds nothing.
    const Group again = group_closure(std::vector<Perm>(g.elements().begin(), g.elements().end()));
    CHECK(again.order() == g.order());
  }

  TEST_CASE("conjugacy classes") {
    const Group s3 = group_closure({cyc("(1,2,3)", 3), cyc("(1,2)", 3)});
    CHECK(sizes_of(conjugacy_classes(s3)) == std::multiset<std::size_t>{1, 3, 2});
    const Group psl7 = pgl::build_psl2(7);
    const ClassPartition p = conjugacy_classes(psl7);
    CHECK(sizes_of(p) == std::multiset<std::size_t>{1, 21, 42, 56, 24, 24});
    CHECK(p.classes[0] == std::vector<std::size_t>{0});
    std::mt19937 rng(7);
    std::size_t total = 0;
    for (std::size_t c = 0; c < p.size(); ++c) {
      total += p.sizes[c];
      CHECK(psl7.order() % p.sizes[c] == 0);
      CHECK(p.inverse_class_map[p.inverse_class_map[c]] == c);
      const Perm& r = psl7.element(p.representatives[c]);
      for (int t = 0; t < 50; ++t) {
        const Perm& x = psl7.element(rng() % psl7.order());
        CHECK(p.class_of[*psl7.index_of(x * r * x.inverse())] == c);
      }
    }
    CHECK(total == psl7.order());

    const Group pgl9 = pgl::build_pgl2(9);
    const ClassPartition q = conjugacy_classes(pgl9);
    std::set<std::size_t> order3;
    for (std::size_t i = 0; i < pgl9.order(); ++i)
      if (pgl9.element(i).order() == 3) order3.insert(q.class_of[i]);
    CHECK(order3.size() == 1);
    CHECK(q.sizes[*order3.begin()] == 80);
  }

  TEST_CASE("rational classes are power closed") {
    const Group g = pgl::build_psl2(7);
    const ClassPartition p = conjugacy_classes(g);
    const auto blocks = rational_classes(g, p);
    std::size_t covered = 0;
    for (const auto& b : blocks) {
      covered += b.size();
      std::set<std::size_t> in(b.begin(), b.end());
      const Perm& r = g.element(p.representatives[b.front()]);
      for (std::size_t e = 1; e < r.order(); ++e)
        if (gcd(e, r.order()) == 1) CHECK(in.count(p.class_of[*g.index_of(power(r, static_cast<std::int64_t>(e)))]));
    }
    CHECK(covered == p.size());
    CHECK(blocks.size() == 5);  // the two classes of order 7 merge
  }

  TEST_CASE("orbits and stabilizers") {
    const Group psl5 = pgl::build_psl2(5);
    const Action a = induce_ksets(psl5, 3);
    const auto orbs = action_orbits(a);
    CHECK(orbs.size() == 2);
    CHECK(orbs[0].size() == 10);
    CHECK(orbs[1].size() == 10);
    const Action b = induce_ksets(pgl::build_psl2(13), 3);
    const auto ob = action_orbits(b);
    REQUIRE(ob.size() == 2);
    CHECK(ob[0].size() == 182);
    CHECK(ob[1].size() == 182);
    const Action c = induce_ksets(pgl::build_pgl2(8), 3);
    CHECK(action_orbits(c).size() == 1);
    const Group st = point_stabilizer(c, 0);
    CHECK(st.order() == 6);
    std::size_t invol = 0;
    for (const auto& x : st.elements()) invol += x.order() == 2;
    CHECK(invol == 3);  // Sym(3), not the cyclic group of order 6
    CHECK(point_stabilizer(induce_ksets(pgl::build_psl2(7), 3), 0).order() == 3);
    const Group c7 = group_closure({cyc("(1,2,3,4,5,6,7)", 7)});
    CHECK(point_stabilizer(induce_ksets(c7, 1), 0).order() == 1);
    for (std::size_t pt = 0; pt < 10; ++pt)
      CHECK(point_stabilizer(a, orbs[0][pt]).order() * orbs[0].size() == psl5.order());
  }

  TEST_CASE("subgroup") {
    const Group s4 = group_closure({cyc("(1,2,3,4)", 4), cyc("(1,2)", 4)});
    const Group v4 = subgroup(s4, {cyc("(1,2)(3,4)", 4), cyc("(1,3)(2,4)", 4)}, "V4");
    CHECK(v4.order() == 4);
    CHECK_THROWS(subgroup(s4, {cyc("(1,2)", 5)}, "bad"));
  }
}
