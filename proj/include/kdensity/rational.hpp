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

#ifndef KDENSITY_RATIONAL_HPP_
#define KDENSITY_RATIONAL_HPP_

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kdensity {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

// "num/den" with den > 0; integers still carry "/1".
inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

// Accepts "a/b", "a" or "-a/b".
Rational parse_rational(const std::string& text);

inline double to_double(const Rational& r) {
  return r.convert_to<double>();
}

inline BigInt floor(const Rational& r) {
  BigInt n = boost::multiprecision::numerator(r);
  BigInt d = boost::multiprecision::denominator(r);
  BigInt q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

// Closest rational with denominator <= max_den (continued fractions), if it
// lies within tol of x.
std::optional<Rational> snap_rational(double x, std::int64_t max_den,
                                      double tol = 1e-9);

}  // namespace kdensity

#endif  // KDENSITY_RATIONAL_HPP_
