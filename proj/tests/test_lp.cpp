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

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "kdensity/lp.hpp"

using namespace kdensity;
using namespace kdensity::lp;

namespace {

Rational r(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

LinearProgram<double> to_float(const LinearProgram<Rational>& p) {
  LinearProgram<double> f;
  f.num_vars = p.num_vars;
  f.nonnegative = p.nonnegative;
  for (const auto& c : p.objective) f.objective.push_back(to_double(c));
  f.objective_constant = to_double(p.objective_constant);
  for (const auto& row : p.rows) {
    Constraint<double> c;
    for (const auto& v : row.coeffs) c.coeffs.push_back(to_double(v));
    c.sense = row.sense;
    c.rhs = to_double(row.rhs);
    f.rows.push_back(c);
  }
  return f;
}

// max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3.
LinearProgram<Rational> textbook() {
  LinearProgram<Rational> p;
  p.num_vars = 2;
  p.nonnegative = {true, true};
  p.objective = {r(3), r(2)};
  p.rows = {{{r(1), r(1)}, Sense::le, r(4)}, {{r(1), r(3)}, Sense::le, r(6)}, {{r(1), r(0)}, Sense::le, r(3)}};
  return p;
}

}  // namespace

TEST_SUITE("lp") {
  TEST_CASE("a textbook program") {
    const auto p = textbook();
    const auto e = solve_exact(p);
    REQUIRE(e.status == LpStatus::optimal);
    CHECK(e.value == r(11));
    CHECK(e.x == std::vector<Rational>{r(3), r(1)});
    const auto v = solve_by_vertex_enumeration(p);
    CHECK(v.status == LpStatus::optimal);
    CHECK(v.value == r(11));
    const auto f = solve_float(to_float(p));
    CHECK(f.status == LpStatus::optimal);
    CHECK(f.value == doctest::Approx(11.0));
  }

  TEST_CASE("free variables, equalities and a constant") {
    // max 1 + x - y, x + y = 1, x - y >= -3, x <= 1/2, y free, x free.
    LinearProgram<Rational> p;
    p.num_vars = 2;
    p.nonnegative = {false, false};
    p.objective = {r(1), r(-1)};
    p.objective_constant = r(1);
    p.rows = {{{r(1), r(1)}, Sense::eq, r(1)}, {{r(1), r(-1)}, Sense::ge, r(-3)}, {{r(1), r(0)}, Sense::le, r(1, 2)}};
    const auto e = solve_exact(p);
    REQUIRE(e.status == LpStatus::optimal);
    CHECK(e.value == r(1));
    CHECK(e.x == std::vector<Rational>{r(1, 2), r(1, 2)});
    CHECK(solve_by_vertex_enumeration(p).value == r(1));
  }

  TEST_CASE("infeasible and unbounded") {
    LinearProgram<Rational> inf;
    inf.num_vars = 1;
    inf.nonnegative = {true};
    inf.objective = {r(1)};
    inf.rows = {{{r(1)}, Sense::le, r(-1)}};
    CHECK(solve_exact(inf).status == LpStatus::infeasible);
    CHECK(solve_float(to_float(inf)).status == LpStatus::infeasible);
    CHECK(solve_by_vertex_enumeration(inf).status == LpStatus::infeasible);

    LinearProgram<Rational> unb;
    unb.num_vars = 2;
    unb.nonnegative = {true, false};
    unb.objective = {r(1), r(1)};
    unb.rows = {{{r(1), r(-1)}, Sense::le, r(2)}};
    CHECK(solve_exact(unb).status == LpStatus::unbounded);
    CHECK(solve_float(to_float(unb)).status == LpStatus::unbounded);
    CHECK(solve_by_vertex_enumeration(unb).status == LpStatus::unbounded);
  }

  TEST_CASE("random small programs: three solvers agree") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-6, 6), rhs(0, 12);
    for (int trial = 0; trial < 200; ++trial) {
      LinearProgram<Rational> p;
      p.num_vars = 1 + trial % 3;
      p.nonnegative.assign(p.num_vars, true);
      for (std::size_t j = 0; j < p.num_vars; ++j) p.objective.push_back(r(coef(rng)));
      const int m = 2 + trial % 4;
      for (int i = 0; i < m; ++i) {
        Constraint<Rational> c;
        for (std::size_t j = 0; j < p.num_vars; ++j) c.coeffs.push_back(r(coef(rng)));
        c.rhs = r(rhs(rng));
        p.rows.push_back(c);
      }
      // Keep it bounded.
      Constraint<Rational> cap;
      cap.coeffs.assign(p.num_vars, r(1));
      cap.rhs = r(20);
      p.rows.push_back(cap);
      const auto e = solve_exact(p);
      const auto v = solve_by_vertex_enumeration(p);
      const auto f = solve_float(to_float(p));
      CAPTURE(trial);
      REQUIRE(e.status == LpStatus::optimal);
      CHECK(v.status == LpStatus::optimal);
      CHECK(f.status == LpStatus::optimal);
      CHECK(e.value == v.value);
      CHECK(f.value == doctest::Approx(to_double(e.value)).epsilon(1e-9));
      for (const auto& row : p.rows) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < p.num_vars; ++j) lhs += row.coeffs[j] * e.x[j];
        CHECK(lhs <= row.rhs);
      }
    }
  }

  TEST_CASE("binding rows") {
    // (3, 1) is a degenerate vertex: all three rows are tight.
    const auto e = solve_exact(textbook());
    CHECK(e.binding == std::vector<std::size_t>{0, 1, 2});
  }
}
