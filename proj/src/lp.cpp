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

#include "kdensity/lp.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace kdensity::lp {

namespace {

template <class T>
struct Tol;

template <>
struct Tol<Rational> {
  static bool pos(const Rational& v) { return v > 0; }
  static bool zero(const Rational& v) { return v == 0; }
};

template <>
struct Tol<double> {
  static constexpr double eps = 1e-9;
  static bool pos(double v) { return v > eps; }
  static bool zero(double v) { return std::abs(v) <= eps; }
};

template <class T>
class Simplex {
 public:
  // rows x (cols + 1); the last column is the right-hand side.
  std::vector<std::vector<T>> a;
  std::vector<T> obj;  // reduced costs, obj[cols] = -value
  std::vector<std::size_t> basis;
  std::size_t cols = 0;
  std::vector<bool> allowed;  // columns that may enter

  void pivot(std::size_t r, std::size_t c) {
    const T p = a[r][c];
    for (auto& v : a[r]) v /= p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || Tol<T>::zero(a[i][c])) continue;
      const T f = a[i][c];
      for (std::size_t j = 0; j <= cols; ++j) a[i][j] -= f * a[r][j];
    }
    if (!Tol<T>::zero(obj[c])) {
      const T f = obj[c];
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * a[r][j];
    }
    basis[r] = c;
  }

  void price(const std::vector<T>& cost) {
    obj.assign(cols + 1, T{});
    for (std::size_t j = 0; j < cols; ++j) obj[j] = cost[j];
    for (std::size_t i = 0; i < a.size(); ++i) {
      const T cb = cost[basis[i]];
      if (Tol<T>::zero(cb)) continue;
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= cb * a[i][j];
    }
  }

  // false when unbounded.
  bool run() {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols; ++j)
        if (allowed[j] && Tol<T>::pos(obj[j])) {
          enter = j;
          break;
        }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      T best{};
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!Tol<T>::pos(a[i][*enter])) continue;
        const T ratio = a[i][cols] / a[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }
};

template <class T>
T row_value(const Constraint<T>& row, const std::vector<T>& x) {
  T s{};
  for (std::size_t j = 0; j < x.size(); ++j) s += row.coeffs[j] * x[j];
  return s;
}

template <class T>
LpSolution<T> solve_simplex(const LinearProgram<T>& lp) {
  const std::size_t n = lp.num_vars;
  if (lp.objective.size() != n || lp.nonnegative.size() != n)
    throw std::invalid_argument("LP: objective or sign vector has the wrong length");
  // Structural columns: x_j, plus -x_j for free variables.
  std::vector<std::pair<std::size_t, int>> structural;
  for (std::size_t j = 0; j < n; ++j) {
    structural.push_back({j, 1});
    if (!lp.nonnegative[j]) structural.push_back({j, -1});
  }
  const std::size_t m = lp.rows.size();
  std::size_t slack_count = 0, art_count = 0;
  std::vector<bool> flip(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.rows[i];
    if (row.coeffs.size() != n) throw std::invalid_argument("LP: row has the wrong length");
    flip[i] = row.rhs < T{};
    Sense s = row.sense;
    if (flip[i] && s != Sense::eq) s = s == Sense::le ? Sense::ge : Sense::le;
    if (s != Sense::eq) ++slack_count;
    if (s != Sense::le) ++art_count;
  }
  const std::size_t ns = structural.size();
  const std::size_t cols = ns + slack_count + art_count;
  Simplex<T> sx;
  sx.cols = cols;
  sx.a.assign(m, std::vector<T>(cols + 1, T{}));
  sx.basis.assign(m, 0);
  std::vector<bool> is_art(cols, false);
  std::size_t next_slack = ns, next_art = ns + slack_count;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = lp.rows[i];
    const T sign = flip[i] ? T(-1) : T(1);
    for (std::size_t c = 0; c < ns; ++c) {
      const auto [j, s] = structural[c];
      sx.a[i][c] = sign * row.coeffs[j] * T(s);
    }
    sx.a[i][cols] = sign * row.rhs;
    Sense s = row.sense;
    if (flip[i] && s != Sense::eq) s = s == Sense::le ? Sense::ge : Sense::le;
    if (s == Sense::le) {
      sx.a[i][next_slack] = T(1);
      sx.basis[i] = next_slack++;
    } else {
      if (s == Sense::ge) sx.a[i][next_slack++] = T(-1);
      sx.a[i][next_art] = T(1);
      is_art[next_art] = true;
      sx.basis[i] = next_art++;
    }
  }

  LpSolution<T> out;
  sx.allowed.assign(cols, true);
  if (art_count > 0) {
    std::vector<T> cost(cols, T{});
    for (std::size_t c = 0; c < cols; ++c)
      if (is_art[c]) cost[c] = T(-1);
    sx.price(cost);
    sx.run();
    if (Tol<T>::pos(sx.obj[cols])) {
      out.status = LpStatus::infeasible;
      return out;
    }
    // Drive zero-level artificials out of the basis, dropping redundant rows.
    for (std::size_t i = 0; i < sx.a.size();) {
      if (!is_art[sx.basis[i]]) {
        ++i;
        continue;
      }
      std::optional<std::size_t> c;
      for (std::size_t j = 0; j < cols; ++j)
        if (!is_art[j] && !Tol<T>::zero(sx.a[i][j])) {
          c = j;
          break;
        }
      if (c) {
        sx.pivot(i, *c);
        ++i;
      } else {
        sx.a.erase(sx.a.begin() + static_cast<std::ptrdiff_t>(i));
        sx.basis.erase(sx.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (std::size_t c = 0; c < cols; ++c)
      if (is_art[c]) sx.allowed[c] = false;
  }
  std::vector<T> cost(cols, T{});
  for (std::size_t c = 0; c < ns; ++c) {
    const auto [j, s] = structural[c];
    cost[c] = lp.objective[j] * T(s);
  }
  sx.price(cost);
  if (!sx.run()) {
    out.status = LpStatus::unbounded;
    return out;
  }
  std::vector<T> col_value(cols, T{});
  for (std::size_t i = 0; i < sx.a.size(); ++i) col_value[sx.basis[i]] = sx.a[i][cols];
  out.x.assign(n, T{});
  for (std::size_t c = 0; c < ns; ++c) {
    const auto [j, s] = structural[c];
    out.x[j] += col_value[c] * T(s);
  }
  out.status = LpStatus::optimal;
  out.value = lp.objective_constant;
  for (std::size_t j = 0; j < n; ++j) out.value += lp.objective[j] * out.x[j];
  for (std::size_t i = 0; i < m; ++i)
    if (Tol<T>::zero(row_value(lp.rows[i], out.x) - lp.rows[i].rhs)) out.binding.push_back(i);
  return out;
}

// Unique solution of a square system, or nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
  return x;
}

}  // namespace

LpSolution<Rational> solve_exact(const LinearProgram<Rational>& lp) {
  return solve_simplex(lp);
}

LpSolution<double> solve_float(const LinearProgram<double>& lp) {
  return solve_simplex(lp);
}

LpSolution<Rational> solve_by_vertex_enumeration(const LinearProgram<Rational>& lp,
                                                 const Rational& box) {
  const std::size_t n = lp.num_vars;
  if (n == 0 || n > 3) throw std::invalid_argument("vertex enumeration handles 1 to 3 variables");
  // All constraints as a.x <= b; the trailing ones are bounds.
  struct Half {
    std::vector<Rational> a;
    Rational b;
    bool box = false;
  };
  std::vector<Half> hs;
  for (const auto& row : lp.rows) {
    if (row.sense != Sense::ge) hs.push_back({row.coeffs, row.rhs});
    if (row.sense != Sense::le) {
      Half h{row.coeffs, -row.rhs};
      for (auto& v : h.a) v = -v;
      hs.push_back(h);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n, Rational(0));
    e[j] = 1;
    if (lp.nonnegative[j]) {
      std::vector<Rational> neg(n, Rational(0));
      neg[j] = -1;
      hs.push_back({neg, Rational(0)});
    } else {
      std::vector<Rational> neg(n, Rational(0));
      neg[j] = -1;
      hs.push_back({neg, box, true});
    }
    hs.push_back({e, box, true});
  }

  LpSolution<Rational> best;
  bool found = false, best_boxed = false;
  std::vector<std::size_t> pick(n);
  auto consider = [&]() {
    std::vector<std::vector<Rational>> m;
    std::vector<Rational> b;
    for (std::size_t i : pick) {
      m.push_back(hs[i].a);
      b.push_back(hs[i].b);
    }
    auto x = solve_square(m, b);
    if (!x) return;
    bool boxed = false;
    for (const auto& h : hs) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s += h.a[j] * (*x)[j];
      if (s > h.b) return;
      if (h.box && s == h.b) boxed = true;
    }
    Rational value = lp.objective_constant;
    for (std::size_t j = 0; j < n; ++j) value += lp.objective[j] * (*x)[j];
    // Prefer a strictly better value, then an unboxed vertex at equal value.
    if (!found || value > best.value || (value == best.value && best_boxed && !boxed)) {
      found = true;
      best_boxed = boxed;
      best.value = value;
      best.x = *x;
    }
  };
  auto rec = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
    if (depth == n) {
      consider();
      return;
    }
    for (std::size_t i = from; i < hs.size(); ++i) {
      pick[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  if (!found) {
    best.status = LpStatus::infeasible;
    return best;
  }
  if (best_boxed) {
    best.status = LpStatus::unbounded;
    return best;
  }
  best.status = LpStatus::optimal;
  for (std::size_t i = 0; i < lp.rows.size(); ++i)
    if (row_value(lp.rows[i], best.x) == lp.rows[i].rhs) best.binding.push_back(i);
  return best;
}

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "?";
}

}  // namespace kdensity::lp
