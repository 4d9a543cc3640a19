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

#include "kdensity/gf.hpp"

#include <stdexcept>

namespace kdensity::gf {
namespace {

int mod(std::int64_t a, int p) {
  std::int64_t r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// Remainder of a by b over GF(p); b must have a nonzero leading coefficient.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
  const std::size_t db = b.size() - 1;
  const int lead_inv = [&] {
    for (int x = 1; x < p; ++x)
      if ((b.back() * x) % p == 1) return x;
    throw std::logic_error("poly_rem: non-invertible leading coefficient");
  }();
  while (a.size() > db) {
    const int c = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - 1 - db;
    if (c != 0) {
      for (std::size_t i = 0; i <= db; ++i)
        a[shift + i] = mod(a[shift + i] - static_cast<std::int64_t>(c) * b[i], p);
    }
    a.pop_back();
  }
  return a;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  std::int64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) return std::nullopt;
  return std::make_pair(static_cast<int>(p), k);
}

bool is_irreducible(int p, const std::vector<int>& poly) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; d <= deg / 2; ++d) {
    const std::int64_t count = ipow(p, d);
    for (std::int64_t code = 0; code < count; ++code) {
      std::vector<int> divisor(d + 1);
      std::int64_t c = code;
      for (int i = 0; i < d; ++i) {
        divisor[i] = static_cast<int>(c % p);
        c /= p;
      }
      divisor[d] = 1;
      const auto rem = poly_rem(poly, divisor, p);
      bool all_zero = true;
      for (int v : rem) all_zero = all_zero && v == 0;
      if (all_zero) return false;
    }
  }
  return true;
}

FieldSpec ff_make(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("ff_make: p is not prime");
  if (k < 1) throw std::invalid_argument("ff_make: degree must be >= 1");
  const std::int64_t q = ipow(p, k);
  if (q > kMaxOrder) throw std::invalid_argument("ff_make: field order exceeds 2^16");

  FieldSpec f;
  f.p = p;
  f.k = k;
  f.q = static_cast<int>(q);
  // Candidates x^k + c_{k-1} x^{k-1} + ... + c_0 in increasing code order.
  for (std::int64_t code = 0; code < q; ++code) {
    std::vector<int> poly(k + 1);
    std::int64_t c = code;
    for (int i = 0; i < k; ++i) {
      poly[i] = static_cast<int>(c % p);
      c /= p;
    }
    poly[k] = 1;
    if (is_irreducible(p, poly)) {
      f.modulus = std::move(poly);
      return f;
    }
  }
  throw std::logic_error("ff_make: no irreducible polynomial found");
}

FieldSpec ff_make_order(std::int64_t q) {
  const auto pk = prime_power(q);
  if (!pk) throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
  return ff_make(pk->first, pk->second);
}

FieldElement zero(const FieldSpec& f) { return {std::vector<int>(f.k, 0)}; }

FieldElement one(const FieldSpec& f) {
  FieldElement e = zero(f);
  e.coeffs[0] = 1;
  return e;
}

FieldElement from_int(const FieldSpec& f, std::int64_t value) {
  FieldElement e = zero(f);
  e.coeffs[0] = mod(value, f.p);
  return e;
}

FieldElement from_code(const FieldSpec& f, int code) {
  if (code < 0 || code >= f.q) throw std::out_of_range("from_code: code outside field");
  FieldElement e = zero(f);
  for (int i = 0; i < f.k; ++i) {
    e.coeffs[i] = code % f.p;
    code /= f.p;
  }
  return e;
}

int to_code(const FieldSpec& f, const FieldElement& e) {
  int code = 0;
  for (int i = f.k - 1; i >= 0; --i) code = code * f.p + e.coeffs[i];
  return code;
}

bool is_zero(const FieldElement& e) {
  for (int c : e.coeffs)
    if (c != 0) return false;
  return true;
}

bool is_valid(const FieldSpec& f, const FieldElement& e) {
  if (static_cast<int>(e.coeffs.size()) != f.k) return false;
  for (int c : e.coeffs)
    if (c < 0 || c >= f.p) return false;
  return true;
}

FieldElement add(const FieldSpec& f, const FieldElement& a, const FieldElement& b) {
  FieldElement r = zero(f);
  for (int i = 0; i < f.k; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % f.p;
  return r;
}

FieldElement neg(const FieldSpec& f, const FieldElement& a) {
  FieldElement r = zero(f);
  for (int i = 0; i < f.k; ++i) r.coeffs[i] = (f.p - a.coeffs[i]) % f.p;
  return r;
}

FieldElement sub(const FieldSpec& f, const FieldElement& a, const FieldElement& b) {
  return add(f, a, neg(f, b));
}

FieldElement mul(const FieldSpec& f, const FieldElement& a, const FieldElement& b) {
  std::vector<int> prod(2 * f.k - 1, 0);
  for (int i = 0; i < f.k; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < f.k; ++j)
      prod[i + j] = (prod[i + j] + a.coeffs[i] * b.coeffs[j]) % f.p;
  }
  auto rem = poly_rem(std::move(prod), f.modulus, f.p);
  rem.resize(f.k, 0);
  return {std::move(rem)};
}

FieldElement pow(const FieldSpec& f, const FieldElement& a, std::int64_t e) {
  if (e < 0) return pow(f, inv(f, a), -e);
  FieldElement result = one(f);
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(f, result, base);
    base = mul(f, base, base);
    e >>= 1;
  }
  return result;
}

FieldElement inv(const FieldSpec& f, const FieldElement& a) {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  return pow(f, a, f.q - 2);
}

FieldElement ff_arith(const FieldSpec& f, ArithOp op, const FieldElement& a,
                      const FieldElement& b, std::int64_t exponent) {
  if (!is_valid(f, a)) throw std::invalid_argument("ff_arith: invalid operand");
  switch (op) {
    case ArithOp::add:
      if (!is_valid(f, b)) throw std::invalid_argument("ff_arith: invalid operand");
      return add(f, a, b);
    case ArithOp::mul:
      if (!is_valid(f, b)) throw std::invalid_argument("ff_arith: invalid operand");
      return mul(f, a, b);
    case ArithOp::inv:
      return inv(f, a);
    case ArithOp::pow:
      return pow(f, a, exponent);
  }
  throw std::logic_error("ff_arith: unknown op");
}

bool ff_is_square(const FieldSpec& f, const FieldElement& e) {
  if (is_zero(e)) throw std::domain_error("ff_is_square: zero has no square class");
  if (f.p == 2) return true;
  return pow(f, e, (f.q - 1) / 2) == one(f);
}

FieldElement ff_frobenius(const FieldSpec& f, const FieldElement& e, int j) {
  if (j < 0 || j > f.k) throw std::invalid_argument("ff_frobenius: j outside [0, k]");
  FieldElement r = e;
  for (int i = 0; i < j; ++i) r = pow(f, r, f.p);
  return r;
}

std::int64_t multiplicative_order(const FieldSpec& f, const FieldElement& e) {
  if (is_zero(e)) throw std::domain_error("multiplicative_order of zero");
  const FieldElement id = one(f);
  FieldElement x = e;
  std::int64_t n = 1;
  while (x != id) {
    x = mul(f, x, e);
    ++n;
  }
  return n;
}

FieldElement primitive_element(const FieldSpec& f) {
  for (int code = 1; code < f.q; ++code) {
    FieldElement e = from_code(f, code);
    if (multiplicative_order(f, e) == f.q - 1) return e;
  }
  throw std::logic_error("primitive_element: none found");
}

std::vector<FieldElement> all_elements(const FieldSpec& f) {
  std::vector<FieldElement> out;
  out.reserve(f.q);
  for (int code = 0; code < f.q; ++code) out.push_back(from_code(f, code));
  return out;
}

std::string to_string(const FieldSpec& f, const FieldElement& e) {
  if (f.k == 1) return std::to_string(e.coeffs[0]);
  std::string s;
  for (int i = f.k - 1; i >= 0; --i) {
    if (e.coeffs[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || e.coeffs[i] != 1) s += std::to_string(e.coeffs[i]);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace kdensity::gf
