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

// Finite fields GF(p^k) in a polynomial basis.
//
// Elements are dense coefficient vectors c_0 + c_1 x + ... + c_{k-1} x^{k-1}
// reduced modulo the lexicographically least monic irreducible polynomial of
// degree k. Every element also has an integer code sum c_i p^i in [0, q),
// which fixes the canonical ordering of the field used everywhere else.

#ifndef KDENSITY_GF_HPP_
#define KDENSITY_GF_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kdensity::gf {

struct FieldSpec {
  int p = 0;
  int k = 0;
  // Monic, low degree first, size k + 1.
  std::vector<int> modulus;
  int q = 0;
};

struct FieldElement {
  std::vector<int> coeffs;

  auto operator<=>(const FieldElement&) const = default;
};

bool is_prime(std::int64_t n);

// q = p^k with p prime, otherwise nullopt.
std::optional<std::pair<int, int>> prime_power(std::int64_t q);

// Largest field order supported.
inline constexpr int kMaxOrder = 1 << 16;

FieldSpec ff_make(int p, int k);

// Convenience: ff_make on the factorization of q.
FieldSpec ff_make_order(std::int64_t q);

bool is_irreducible(int p, const std::vector<int>& poly);

FieldElement zero(const FieldSpec& f);
FieldElement one(const FieldSpec& f);
FieldElement from_int(const FieldSpec& f, std::int64_t value);
FieldElement from_code(const FieldSpec& f, int code);
int to_code(const FieldSpec& f, const FieldElement& e);
bool is_zero(const FieldElement& e);
bool is_valid(const FieldSpec& f, const FieldElement& e);

FieldElement add(const FieldSpec& f, const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldSpec& f, const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldSpec& f, const FieldElement& a);
FieldElement mul(const FieldSpec& f, const FieldElement& a, const FieldElement& b);
FieldElement pow(const FieldSpec& f, const FieldElement& a, std::int64_t e);
// Throws std::domain_error on zero.
FieldElement inv(const FieldSpec& f, const FieldElement& a);

enum class ArithOp { add, mul, inv, pow };

// Single entry point over the four operations; pow takes its exponent from
// `exponent`, inv ignores `b`.
FieldElement ff_arith(const FieldSpec& f, ArithOp op, const FieldElement& a,
                      const FieldElement& b = {}, std::int64_t exponent = 0);

// Euler's criterion; characteristic 2 is always true. Zero is rejected.
bool ff_is_square(const FieldSpec& f, const FieldElement& e);

// e^(p^j), 0 <= j <= k.
FieldElement ff_frobenius(const FieldSpec& f, const FieldElement& e, int j);

std::int64_t multiplicative_order(const FieldSpec& f, const FieldElement& e);

// Least generator of the multiplicative group by integer code.
FieldElement primitive_element(const FieldSpec& f);

std::vector<FieldElement> all_elements(const FieldSpec& f);

std::string to_string(const FieldSpec& f, const FieldElement& e);

}  // namespace kdensity::gf

#endif  // KDENSITY_GF_HPP_
