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
#include "kdensity/cases.hpp"
#include "kdensity/pgl.hpp"
#include "oracle.hpp"

using namespace kdensity;

TEST_SUITE("action") {
  TEST_CASE("k-set ranks") {
    const auto sets = all_ksets(6, 3);
    CHECK(sets.size() == 20);
    for (std::size_t i = 0; i < sets.size(); ++i) CHECK(kset_rank(sets[i], 6) == i);
    CHECK(binomial(9, 3) == 84);
    CHECK(oracle::subsets(6, 3).size() == 20);
  }

  TEST_CASE("induced actions") {
    const Group s4 = group_closure({Perm::from_cycles("(1,2,3,4)", 4), Perm::from_cycles("(1,2)", 4)});
    const Action a = induce_ksets(s4, 2);
    CHECK(a.domain_size() == 6);
    CHECK(a.transitive());
    const Action b = induce_ksets(pgl::build_pgl2(8), 3);
    CHECK(b.domain_size() == 84);
    CHECK(b.transitive());
    const Action c = induce_ksets(pgl::build_psl2(9), 3);
    CHECK(c.domain_size() == 120);
    CHECK_FALSE(c.transitive());
    CHECK_THROWS_AS(induce_ksets(s4, 4), std::invalid_argument);
    CHECK_THROWS_AS(induce_ksets(s4, 0), std::invalid_argument);
    // induced_perm agrees with the action on every set.
    const Group g = pgl::build_pgl2(5);
    const Action d = induce_ksets(g, 3);
    for (const auto& x : g.elements()) {
      const Perm y = induced_perm(x, 3);
      for (std::size_t i = 0; i < d.domain_size(); ++i) CHECK(y(static_cast<Point>(i)) == d.image(x, i));
    }
  }

  TEST_CASE("derangements against the definition") {
    for (auto [q, k] : {std::pair{7, 3}, {7, 2}, {8, 3}, {9, 3}, {11, 3}, {5, 2}}) {
      const Group g = pgl::build_pgl2(q);
      const Action a = induce_ksets(g, static_cast<std::size_t>(k));
      const ClassPartition cp = conjugacy_classes(g);
      const DerangementData d = derangement_set(a, &cp, 2);
      const auto domain = oracle::subsets(g.degree(), static_cast<std::size_t>(k));
      std::size_t count = 0;
      for (std::size_t i = 0; i < g.order(); ++i) {
        const bool der = !oracle::fixes_a_set(g.element(i), domain);
        CHECK(static_cast<bool>(d.is_derangement[i]) == der);
        count += der;
      }
      CHECK(d.count == count);
      CHECK(d.class_constant);
      CHECK_FALSE(d.is_derangement[0]);
    }
  }

  TEST_CASE("PSL(2,7) on 3-sets") {
    const Group g = pgl::build_psl2(7);
    const DerangementData d = derangement_set(induce_ksets(g, 3));
    CHECK(d.count == 111);
    for (std::size_t i = 1; i < g.order(); ++i)
      if (!d.is_derangement[i]) CHECK(g.element(i).order() == 3);
  }

  TEST_CASE("PGL(2,9): the coset outside PSL consists of derangements") {
    const Group g = pgl::build_pgl2(9), s = pgl::build_psl2(9);
    const DerangementData d = derangement_set(induce_ksets(g, 3));
    std::size_t outside = 0;
    for (std::size_t i = 0; i < g.order(); ++i)
      if (!s.contains(g.element(i))) {
        ++outside;
        CHECK(d.is_derangement[i]);
      }
    CHECK(outside == 360);
  }

  TEST_CASE("orbit split by sign") {
    for (int q : {5, 9, 13}) {
      const auto [sq, ns] = split_3set_orbits(q);
      const std::size_t half = binomial(static_cast<std::size_t>(q) + 1, 3) / 2;
      CHECK(sq.domain_size() == half);
      CHECK(ns.domain_size() == half);
      CHECK(sq.transitive());
      CHECK(ns.transitive());
      CHECK(point_stabilizer(sq, 0).order() == point_stabilizer(ns, 0).order());
      CHECK(point_stabilizer(sq, 0).order() * half == sq.group().order());
    }
    const auto nine = split_3set_orbits(9);
    CHECK(nine.first.domain_size() == 60);
    CHECK(point_stabilizer(nine.first, 0).order() == 6);
    CHECK_THROWS_AS(split_3set_orbits(7), std::invalid_argument);
  }

  TEST_CASE("intersecting subgroups and sets") {
    const Group psl27 = pgl::build_psl2(27);
    CHECK(is_intersecting_subgroup(pgl::build_named_subgroup(pgl::SubgroupKind::unipotent, 27), induce_ksets(psl27, 3)));
    const Group psl7 = pgl::build_psl2(7);
    const Action pairs = induce_ksets(psl7, 2);
    CHECK(is_intersecting_subgroup(pgl::build_named_subgroup(pgl::SubgroupKind::a4, 7), pairs));
    const Action triples = induce_ksets(psl7, 3);
    const DerangementData d = derangement_set(triples);
    std::size_t der = 0, nonder = 0;
    for (std::size_t i = 1; i < psl7.order(); ++i) (d.is_derangement[i] ? der : nonder) = i;
    const Perm id = psl7.element(0);
    CHECK(is_intersecting_set(std::vector<Perm>{id, psl7.element(nonder)}, triples));
    CHECK_FALSE(is_intersecting_set(std::vector<Perm>{id, psl7.element(der)}, triples));
    const Group cyc = group_closure({psl7.element(der)});
    CHECK_FALSE(is_intersecting_subgroup(cyc, triples));
    CHECK_THROWS(is_intersecting_set(std::vector<Perm>{Perm::from_cycles("(1,2)", 8)}, triples));
  }

  TEST_CASE("the listed 15 permutations") {
    std::vector<Perm> set;
    for (const auto& c : example15_cycles()) set.push_back(Perm::from_cycles(c, 10));
    const auto h = std::make_shared<const Group>(group_closure(set));
    CHECK(h->order() == 360);
    const Action full = induce_ksets(h, 3);
    const auto orbs = action_orbits(full);
    REQUIRE(orbs.size() == 2);
    int hits = 0;
    for (std::size_t o = 0; o < 2; ++o) {
      std::vector<KSet> dom;
      for (std::size_t i : orbs[o]) dom.push_back(full.domain()[i]);
      const bool lib = is_intersecting_set(set, restrict_to_orbit(full, o));
      CHECK(lib == oracle::intersecting(set, dom));
      hits += lib;
    }
    CHECK(hits >= 1);
  }
}
