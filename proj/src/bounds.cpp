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

#include "kdensity/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "kdensity/lp.hpp"

namespace kdensity {

namespace {

bool in_selection(const ClassSelection& t, std::size_t c) {
  return std::binary_search(t.classes.begin(), t.classes.end(), c);
}

std::optional<Rational> snap_integer(std::complex<double> v) {
  const double scale = std::max(1.0, std::abs(v));
  if (std::abs(v.imag()) > 1e-7 * scale) return std::nullopt;
  const double r = std::round(v.real());
  if (std::abs(v.real() - r) > 1e-7 * scale) return std::nullopt;
  return make_rational(static_cast<std::int64_t>(r));
}

std::int64_t floor_value(const BoundResult& b) {
  if (b.exact) return static_cast<std::int64_t>(floor(*b.value));
  return static_cast<std::int64_t>(std::floor(b.approx + 1e-9 * std::abs(b.approx)));
}

}  // namespace

Weighting unit_weighting(const EigenTable& et, const ClassSelection& t) {
  Weighting w;
  w.w.assign(et.num_classes(), Rational(0));
  for (std::size_t c : t.classes) w.w[c] = 1;
  return w;
}

BlockSystem block_system(const EigenTable& et, const ClassSelection& t) {
  check_inverse_closed(et, t);
  BlockSystem bs;
  for (const auto& b : et.blocks) {
    std::vector<std::size_t> part;
    for (std::size_t c : b)
      if (in_selection(t, c)) part.push_back(c);
    if (part.empty()) continue;
    std::size_t size = 0;
    for (std::size_t c : part) size += et.class_sizes[c];
    bs.blocks.push_back(std::move(part));
    bs.block_sizes.push_back(size);
  }
  std::vector<std::vector<Rational>> exact;
  bool all_exact = true;
  for (const auto& row : et.rows) {
    std::vector<double> a;
    std::vector<Rational> e;
    for (const auto& b : bs.blocks) {
      std::complex<double> s = 0;
      for (std::size_t c : b) s += row.omega[c];
      a.push_back(s.real());
      if (auto v = snap_integer(s)) {
        e.push_back(*v);
      } else {
        all_exact = false;
      }
    }
    bs.approx.push_back(std::move(a));
    exact.push_back(std::move(e));
  }
  if (all_exact) bs.exact = std::move(exact);
  return bs;
}

BoundResult ratio_bound(const EigenTable& et, const ClassSelection& t, const Weighting& w,
                        std::size_t num_vertices, std::string method) {
  check_inverse_closed(et, t);
  if (w.w.size() != et.num_classes()) throw std::invalid_argument("weighting has the wrong length");
  bool any = false;
  BigInt lcm = 1;
  for (std::size_t c = 0; c < et.num_classes(); ++c) {
    const Rational& x = w.w[c];
    if (x < 0) throw std::invalid_argument("weights must be nonnegative");
    if (x != 0 && !in_selection(t, c)) throw std::invalid_argument("weight on a class outside the selection");
    if (x != w.w[et.inverse_class_map[c]]) throw std::invalid_argument("weights differ on inverse classes");
    if (x > 0) any = true;
    const BigInt den = boost::multiprecision::denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  if (!any) throw std::invalid_argument("ratio bound: all weights are zero");

  BoundResult r;
  r.kind = BoundKind::ratio;
  r.method = std::move(method);
  r.weights = w.w;
  std::vector<double> approx;
  std::vector<Rational> exact;
  bool all_exact = true;
  const double lcm_d = lcm.convert_to<double>();
  for (const auto& row : et.rows) {
    std::complex<double> s = 0;
    for (std::size_t c : t.classes) s += (to_double(w.w[c]) * lcm_d) * row.omega[c];
    approx.push_back(s.real() / lcm_d);
    if (auto v = snap_integer(s)) {
      exact.push_back(*v / Rational(lcm));
    } else {
      all_exact = false;
    }
  }
  r.exact = all_exact;
  r.d_approx = approx[0];
  r.tau_approx = *std::min_element(approx.begin(), approx.end());
  if (r.d_approx <= 0) throw std::invalid_argument("ratio bound: degree is zero");
  if (all_exact) {
    r.d = exact[0];
    r.tau = *std::min_element(exact.begin(), exact.end());
    if (*r.tau >= 0) {
      r.vacuous = true;
      return r;
    }
    r.value = Rational(static_cast<long long>(num_vertices)) * (-*r.tau) / (*r.d - *r.tau);
    r.approx = to_double(*r.value);
  } else {
    if (r.tau_approx >= -1e-9) {
      r.vacuous = true;
      return r;
    }
    r.approx = static_cast<double>(num_vertices) * (-r.tau_approx) / (r.d_approx - r.tau_approx);
  }
  r.floored = floor_value(r);
  return r;
}

BoundResult ratio_weight_search(const EigenTable& et, const ClassSelection& t,
                                std::size_t num_vertices) {
  const BlockSystem bs = block_system(et, t);
  const std::size_t nb = bs.blocks.size();
  if (nb == 0) throw std::invalid_argument("ratio weight search: empty selection");
  Weighting w;
  w.w.assign(et.num_classes(), Rational(0));
  // Variables w_0..w_{nb-1} >= 0 and a free tau; maximize tau.
  auto build = [&](auto zero, const auto& coeff, const auto& size) {
    using T = decltype(zero);
    lp::LinearProgram<T> prog;
    prog.num_vars = nb + 1;
    prog.nonnegative.assign(nb + 1, true);
    prog.nonnegative[nb] = false;
    prog.objective.assign(nb + 1, T(0));
    prog.objective[nb] = T(1);
    for (std::size_t r = 1; r < et.rows.size(); ++r) {
      lp::Constraint<T> c;
      for (std::size_t b = 0; b < nb; ++b) c.coeffs.push_back(coeff(r, b));
      c.coeffs.push_back(T(-1));
      c.sense = lp::Sense::ge;
      c.rhs = T(0);
      prog.rows.push_back(std::move(c));
    }
    lp::Constraint<T> norm;
    for (std::size_t b = 0; b < nb; ++b) norm.coeffs.push_back(size(b));
    norm.coeffs.push_back(T(0));
    norm.sense = lp::Sense::eq;
    norm.rhs = T(1);
    prog.rows.push_back(std::move(norm));
    return prog;
  };
  if (bs.exact) {
    const auto& ex = *bs.exact;
    const auto sol = lp::solve_exact(build(
        Rational(0), [&](std::size_t r, std::size_t b) { return ex[r][b]; },
        [&](std::size_t b) { return Rational(static_cast<long long>(bs.block_sizes[b])); }));
    if (sol.status != lp::LpStatus::optimal) throw std::runtime_error("ratio weight search LP not optimal");
    for (std::size_t b = 0; b < nb; ++b)
      for (std::size_t c : bs.blocks[b]) w.w[c] = sol.x[b];
  } else {
    const auto sol = lp::solve_float(build(
        0.0, [&](std::size_t r, std::size_t b) { return bs.approx[r][b]; },
        [&](std::size_t b) { return static_cast<double>(bs.block_sizes[b]); }));
    if (sol.status != lp::LpStatus::optimal) throw std::runtime_error("ratio weight search LP not optimal");
    for (std::size_t b = 0; b < nb; ++b) {
      const auto v = snap_rational(std::max(0.0, sol.x[b]), 1'000'000, 1e-6);
      for (std::size_t c : bs.blocks[b]) w.w[c] = v ? *v : Rational(0);
    }
  }
  return ratio_bound(et, t, w, num_vertices, "ratio-auto");
}

BoundResult clique_lp_bound(const EigenTable& et, const ClassSelection& t) {
  BoundResult r;
  r.kind = BoundKind::lp;
  r.method = "lp-clique";
  const BlockSystem bs = block_system(et, t);
  const std::size_t nb = bs.blocks.size();
  r.blocks = bs.blocks;
  if (nb == 0) {
    r.value = Rational(1);
    r.approx = 1;
    r.floored = 1;
    return r;
  }
  // Distinct constraint rows, remembering which eigenrows produced them.
  std::vector<std::size_t> first_row;
  std::vector<std::vector<std::size_t>> row_groups;
  if (bs.exact) {
    std::map<std::vector<Rational>, std::size_t> seen;
    for (std::size_t row = 0; row < et.rows.size(); ++row) {
      auto [it, fresh] = seen.emplace((*bs.exact)[row], first_row.size());
      if (fresh) {
        first_row.push_back(row);
        row_groups.push_back({});
      }
      row_groups[it->second].push_back(row);
    }
  } else {
    for (std::size_t row = 0; row < et.rows.size(); ++row) {
      first_row.push_back(row);
      row_groups.push_back({row});
    }
  }

  if (bs.exact) {
    lp::LinearProgram<Rational> prog;
    prog.num_vars = nb;
    prog.nonnegative.assign(nb, false);
    prog.objective_constant = 1;
    for (std::size_t b = 0; b < nb; ++b) prog.objective.push_back(Rational(static_cast<long long>(bs.block_sizes[b])));
    for (std::size_t row : first_row) {
      lp::Constraint<Rational> c;
      c.coeffs = (*bs.exact)[row];
      c.sense = lp::Sense::ge;
      c.rhs = -1;
      prog.rows.push_back(std::move(c));
    }
    const auto sol = nb <= 3 ? lp::solve_by_vertex_enumeration(prog) : lp::solve_exact(prog);
    if (sol.status == lp::LpStatus::unbounded)
      throw std::runtime_error("clique LP is unbounded (no negative eigenvalue constrains it)");
    if (sol.status != lp::LpStatus::optimal) throw std::runtime_error("clique LP is infeasible");
    r.value = sol.value;
    r.approx = to_double(sol.value);
    r.optimizer = sol.x;
    for (const auto& x : sol.x) r.optimizer_approx.push_back(to_double(x));
    for (std::size_t i : sol.binding)
      for (std::size_t row : row_groups[i]) r.binding_rows.push_back(row);
  } else {
    lp::LinearProgram<double> prog;
    prog.num_vars = nb;
    prog.nonnegative.assign(nb, false);
    prog.objective_constant = 1;
    for (std::size_t b = 0; b < nb; ++b) prog.objective.push_back(static_cast<double>(bs.block_sizes[b]));
    for (std::size_t row : first_row) {
      lp::Constraint<double> c;
      c.coeffs = bs.approx[row];
      c.sense = lp::Sense::ge;
      c.rhs = -1;
      prog.rows.push_back(std::move(c));
    }
    const auto sol = lp::solve_float(prog);
    if (sol.status == lp::LpStatus::unbounded)
      throw std::runtime_error("clique LP is unbounded (no negative eigenvalue constrains it)");
    if (sol.status != lp::LpStatus::optimal) throw std::runtime_error("clique LP is infeasible");
    r.exact = false;
    r.approx = sol.value;
    r.optimizer_approx = sol.x;
    for (std::size_t i : sol.binding)
      for (std::size_t row : row_groups[i]) r.binding_rows.push_back(row);
  }
  std::sort(r.binding_rows.begin(), r.binding_rows.end());
  r.floored = floor_value(r);
  return r;
}

CocliqueBound coclique_bound(const EigenTable& et, const ClassSelection& edges,
                             std::size_t num_vertices) {
  CocliqueBound out;
  if (edges.classes.empty()) {
    BoundResult r;
    r.kind = BoundKind::trivial;
    r.method = "trivial";
    r.value = Rational(static_cast<long long>(num_vertices));
    r.approx = static_cast<double>(num_vertices);
    r.floored = static_cast<std::int64_t>(num_vertices);
    out.candidates.push_back(r);
    out.best = r;
    return out;
  }
  out.candidates.push_back(ratio_bound(et, edges, unit_weighting(et, edges), num_vertices, "ratio"));
  out.candidates.push_back(ratio_weight_search(et, edges, num_vertices));
  out.candidates.push_back(clique_lp_bound(et, complement(et, edges)));
  const BoundResult* best = nullptr;
  for (const auto& c : out.candidates) {
    if (c.vacuous || !c.floored) continue;
    if (!best || *c.floored < *best->floored) best = &c;
  }
  if (!best) throw std::runtime_error("coclique bound: every method was vacuous");
  out.best = *best;
  return out;
}

nlohmann::json to_json(const BoundResult& b) {
  nlohmann::json j;
  j["method"] = b.method;
  j["kind"] = b.kind == BoundKind::ratio ? "ratio" : b.kind == BoundKind::lp ? "lp" : "trivial";
  if (b.vacuous) {
    j["vacuous"] = true;
    return j;
  }
  if (b.exact && b.value) {
    j["value"] = to_string(*b.value);
  } else {
    j["value"] = b.approx;
    j["float"] = true;
  }
  if (b.floored) j["floored"] = *b.floored;
  if (b.kind == BoundKind::ratio) {
    if (b.d) {
      j["d"] = to_string(*b.d);
      j["tau"] = to_string(*b.tau);
    } else {
      j["d"] = b.d_approx;
      j["tau"] = b.tau_approx;
      j["d_tau_float"] = true;
    }
    nlohmann::json w = nlohmann::json::object();
    for (std::size_t c = 0; c < b.weights.size(); ++c)
      if (b.weights[c] != 0) w[std::to_string(c)] = to_string(b.weights[c]);
    j["weights"] = w;
  }
  if (b.kind == BoundKind::lp) {
    j["blocks"] = b.blocks;
    if (!b.optimizer.empty()) {
      nlohmann::json x = nlohmann::json::array();
      for (const auto& v : b.optimizer) x.push_back(to_string(v));
      j["optimizer"] = x;
    } else {
      j["optimizer"] = b.optimizer_approx;
      j["optimizer_float"] = true;
    }
    j["binding_rows"] = b.binding_rows;
  }
  return j;
}

}  // namespace kdensity
