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
#include "kdensity/gf.hpp"

using namespace kdensity::gf;

namespace {

// Monic polynomial (low-first, leading 1) has a root in F_p.
bool has_root(int p, const std::vector<int>& poly) {
  for (int x = 0; x < p; ++x) {
    long v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = (v * x + poly[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

int code_of(int p, const std::vector<int>& poly) {
  int c = 0;
  for (std::size_t i = poly.size(); i-- > 0;) c = c * p + poly[i];
  return c;
}

}  // namespace

TEST_SUITE("gf") {
  TEST_CASE("field sizes and prime field modulus") {
    const FieldSpec f2 = ff_make(2, 1);
    CHECK(f2.q == 2);
    CHECK(f2.modulus == std::vector<int>{0, 1});
    CHECK(ff_make(2, 4).q == 16);
    CHECK(all_elements(ff_make(2, 4)).size() == 16);
    CHECK(ff_make(3, 2).modulus == std::vector<int>{1, 0, 1});
    CHECK_THROWS_AS(ff_make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(ff_make_order(12), std::invalid_argument);
  }

  TEST_CASE("modulus is the least irreducible by code (degrees 2 and 3)") {
    for (auto [p, k] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
      const FieldSpec f = ff_make(p, k);
      CHECK_FALSE(has_root(p, f.modulus));
      const int best = code_of(p, f.modulus);
      std::vector<int> cand(static_cast<std::size_t>(k) + 1, 0);
      cand[static_cast<std::size_t>(k)] = 1;
      int total = 1;
      for (int i = 0; i < k; ++i) total *= p;
      for (int c = 0; c < total; ++c) {
        int x = c;
        for (int i = 0; i < k; ++i, x /= p) cand[static_cast<std::size_t>(i)] = x % p;
        if (code_of(p, cand) < best) CHECK(has_root(p, cand));
      }
    }
  }

  TEST_CASE("arithmetic examples") {
    const FieldSpec f9 = ff_make(3, 2);
    const FieldElement x = from_code(f9, 3);
    CHECK(to_code(f9, mul(f9, x, x)) == 2);
    const FieldSpec f7 = ff_make(7, 1);
    CHECK(to_code(f7, pow(f7, from_int(f7, 3), 6)) == 1);
    CHECK(to_code(f7, ff_arith(f7, ArithOp::pow, from_int(f7, 3), {}, 6)) == 1);
    CHECK_THROWS(inv(f7, zero(f7)));
    for (int q : {4, 8, 9, 16, 25, 27}) {
      const FieldSpec f = ff_make_order(q);
      for (const auto& a : all_elements(f)) {
        if (is_zero(a)) continue;
        CHECK(mul(f, a, inv(f, a)) == one(f));
        CHECK(pow(f, a, q - 1) == one(f));
      }
    }
  }

  TEST_CASE("field axioms by exhaustion") {
    for (int q : {4, 9, 8}) {
      const FieldSpec f = ff_make_order(q);
      const auto els = all_elements(f);
      for (const auto& a : els)
        for (const auto& b : els) {
          CHECK(add(f, a, b) == add(f, b, a));
          CHECK(mul(f, a, b) == mul(f, b, a));
          for (const auto& c : els) CHECK(mul(f, a, add(f, b, c)) == add(f, mul(f, a, b), mul(f, a, c)));
        }
    }
  }

  TEST_CASE("squares") {
    CHECK(ff_is_square(ff_make(13, 1), neg(ff_make(13, 1), one(ff_make(13, 1)))));
    const FieldSpec f7 = ff_make(7, 1);
    CHECK_FALSE(ff_is_square(f7, neg(f7, one(f7))));
    std::set<int> sq;
    for (int a = 1; a < 7; ++a)
      if (ff_is_square(f7, from_int(f7, a))) sq.insert(a);
    CHECK(sq == std::set<int>{1, 2, 4});
    const FieldSpec f9 = ff_make(3, 2);
    CHECK_FALSE(ff_is_square(f9, primitive_element(f9)));
    CHECK(multiplicative_order(f9, primitive_element(f9)) == 8);
    for (int q : {5, 7, 9, 11, 13, 25, 27}) {
      const FieldSpec f = ff_make_order(q);
      const auto els = all_elements(f);
      int count = 0;
      for (const auto& a : els) {
        if (is_zero(a)) continue;
        count += ff_is_square(f, a);
        for (const auto& b : els) {
          if (is_zero(b)) continue;
          CHECK(ff_is_square(f, mul(f, a, b)) == (ff_is_square(f, a) == ff_is_square(f, b)));
        }
      }
      CHECK(count == (q - 1) / 2);
    }
    const FieldSpec f8 = ff_make(2, 3);
    for (const auto& a : all_elements(f8))
      if (!is_zero(a)) CHECK(ff_is_square(f8, a));
  }

  TEST_CASE("frobenius") {
    const FieldSpec f9 = ff_make(3, 2);
    std::set<int> fixed;
    for (const auto& e : all_elements(f9)) {
      CHECK(ff_frobenius(f9, e, 1) == pow(f9, e, 3));
      CHECK(ff_frobenius(f9, e, 2) == e);
      if (ff_frobenius(f9, e, 1) == e) fixed.insert(to_code(f9, e));
    }
    CHECK(fixed == std::set<int>{0, 1, 2});
    for (int q : {4, 8, 9, 16, 25, 27, 32}) {
      const FieldSpec f = ff_make_order(q);
      const auto els = all_elements(f);
      for (const auto& a : els)
        for (const auto& b : els) {
          CHECK(ff_frobenius(f, add(f, a, b), 1) == add(f, ff_frobenius(f, a, 1), ff_frobenius(f, b, 1)));
          CHECK(ff_frobenius(f, mul(f, a, b), 1) == mul(f, ff_frobenius(f, a, 1), ff_frobenius(f, b, 1)));
        }
    }
  }
}
