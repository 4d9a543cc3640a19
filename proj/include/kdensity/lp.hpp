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

// Small dense linear programs: an exact rational simplex, the same simplex
// in doubles, and exact vertex enumeration for up to three variables.

#ifndef KDENSITY_LP_HPP_
#define KDENSITY_LP_HPP_

#include <cstddef>
#include <vector>

#include "kdensity/rational.hpp"

namespace kdensity::lp {

enum class Sense { le, ge, eq };

template <class T>
struct Constraint {
  std::vector<T> coeffs;
  Sense sense = Sense::le;
  T rhs{};
};

// maximize objective_constant + objective . x subject to the rows.
template <class T>
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<bool> nonnegative;  // per variable; free otherwise
  std::vector<T> objective;
  T objective_constant{};
  std::vector<Constraint<T>> rows;
};

enum class LpStatus { optimal, infeasible, unbounded };

template <class T>
struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  T value{};
  std::vector<T> x;
  std::vector<std::size_t> binding;  // rows holding with equality
};

// Two-phase simplex with Bland's rule. Exact for Rational, tolerance 1e-9
// for double.
LpSolution<Rational> solve_exact(const LinearProgram<Rational>& lp);
LpSolution<double> solve_float(const LinearProgram<double>& lp);

// Every basic solution of at most three variables, solved exactly. Free
// variables are boxed by |x| <= box; an optimum that needs the box is
// reported as unbounded.
LpSolution<Rational> solve_by_vertex_enumeration(const LinearProgram<Rational>& lp,
                                                 const Rational& box = Rational(1000000000));

const char* to_string(LpStatus s);

}  // namespace kdensity::lp

#endif  // KDENSITY_LP_HPP_
