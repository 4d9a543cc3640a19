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

#include "kdensity/cases.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iterator>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kdensity/pgl.hpp"
#include "kdensity/scheme.hpp"

namespace kdensity {

bool CaseResult::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

Rational frac(std::int64_t a, std::int64_t b = 1) { return make_rational(a, b); }

struct Ctx {
  CaseResult& r;
  const DensityOptions& opts;

  bool check(std::string name, bool ok, std::string detail = {}) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  }
  template <class T>
  bool equal(std::string name, const T& got, const T& want) {
    std::ostringstream os;
    os << "got " << got << ", want " << want;
    return check(std::move(name), got == want, os.str());
  }
  bool equal_q(std::string name, const Rational& got, const Rational& want) {
    return check(std::move(name), got == want, "got " + to_string(got) + ", want " + to_string(want));
  }
};

std::shared_ptr<const Group> builtin(const std::string& kind, int q) {
  return std::make_shared<const Group>(build_builtin(kind, q));
}

std::vector<Perm> perms_of(const Group& g, const std::vector<std::size_t>& idx) {
  std::vector<Perm> out;
  for (std::size_t i : idx) out.push_back(g.element(i));
  return out;
}

// compute_density plus the checks every computed report must satisfy.
DensityReport run_density(Ctx& c, const std::string& label, const Action& a, DensityOptions o) {
  DensityReport rep = compute_density(a, o);
  rep.case_id = c.r.id;
  const std::string p = label + ": ";
  std::size_t construction = 0;
  for (const auto& con : rep.constructions)
    if (con.verified) construction = std::max(construction, con.elements.size());
  if (rep.bounds) {
    const auto b = rep.bounds->best.floored;
    c.check(p + "sandwich", b && construction <= rep.lower && static_cast<std::int64_t>(rep.lower) <= rep.upper &&
                                rep.upper <= *b,
            std::to_string(construction) + " <= " + std::to_string(rep.lower) + " <= " + std::to_string(rep.upper) +
                " <= " + (b ? std::to_string(*b) : "?"));
  }
  if (rep.exact) {
    const auto& cert = rep.exact->certificate;
    c.check(p + "certificate", cert.size() == rep.exact->size && is_intersecting_set(perms_of(a.group(), cert), a),
            std::to_string(cert.size()) + " elements re-checked");
  }
  c.check(p + "rho >= 1", rep.rho >= frac(1), to_string(rep.rho));
  c.r.reports.push_back(rep);
  return rep;
}

void expect_density(Ctx& c, const std::string& label, const DensityReport& rep, const Rational& rho,
                    std::size_t max) {
  c.equal_q(label + ": rho", rep.rho, rho);
  c.equal(label + ": max intersecting", rep.lower, max);
  c.equal<std::string>(label + ": status", rep.status, "exact");
}

struct SchemeView {
  SchemeData s;
  DerangementData der;
  ClassSelection edges;
};

SchemeView scheme_view(const Action& a) {
  SchemeView v;
  v.s = build_scheme(a.group());
  v.der = derangement_set(a, &v.s.classes);
  for (std::size_t cls = 1; cls < v.s.classes.size(); ++cls)
    if (v.der.class_is_derangement[cls]) v.edges.classes.push_back(cls);
  return v;
}

std::size_t class_order(const Group& g, const ClassPartition& cp, std::size_t cls) {
  return g.element(cp.representatives[cls]).order();
}

// LP variables keyed by element order; checks that `want` is
// feasible and reaches the solver's optimum and that the solver optimizer
// agrees.
using RowSet = std::set<std::vector<Rational>>;

// Rows are coefficient vectors ordered by element order (2, then 3); the
// trivial row is left out.
// Returns the number of expected rows with no eigenrow here.
std::size_t check_lp_optimizer(Ctx& c, const Group& g, const SchemeView& v, const BoundResult& lp,
                               const std::map<std::size_t, Rational>& want, const RowSet& rows,
                               const RowSet& binding) {
  const ClassSelection comp = complement(v.s.table, v.edges);
  const BlockSystem bs = block_system(v.s.table, comp);
  if (!c.check("LP exact coefficients", bs.exact.has_value())) return rows.size();
  std::vector<Rational> x(bs.blocks.size());
  std::set<std::size_t> seen;
  nlohmann::json solver = nlohmann::json::object();
  bool keyed = true;
  for (std::size_t b = 0; b < bs.blocks.size(); ++b) {
    const std::size_t ord = class_order(g, v.s.classes, bs.blocks[b].front());
    for (std::size_t cls : bs.blocks[b]) keyed &= class_order(g, v.s.classes, cls) == ord;
    keyed &= seen.insert(ord).second && want.count(ord);
    if (want.count(ord)) x[b] = want.at(ord);
    if (b < lp.optimizer.size()) solver["order " + std::to_string(ord)] = to_string(lp.optimizer[b]);
  }
  c.r.artifacts["lp_optimizer_by_order"] = solver;
  if (!c.check("LP variables match element orders", keyed && seen.size() == want.size())) return rows.size();
  std::vector<std::size_t> slot(x.size());
  for (std::size_t b = 0; b < x.size(); ++b)
    slot[b] = static_cast<std::size_t>(
        std::distance(want.begin(), want.find(class_order(g, v.s.classes, bs.blocks[b].front()))));
  Rational obj = 1;
  bool feasible = true;
  RowSet got_rows, got_binding;
  for (std::size_t b = 0; b < x.size(); ++b) obj += x[b] * static_cast<long long>(bs.block_sizes[b]);
  for (std::size_t r = 0; r < bs.exact->size(); ++r) {
    const auto& row = (*bs.exact)[r];
    Rational lhs = 1;
    std::vector<Rational> key(x.size());
    for (std::size_t b = 0; b < x.size(); ++b) {
      lhs += x[b] * row[b];
      key[slot[b]] = row[b];
    }
    feasible &= lhs >= 0;
    if (r == 0) continue;
    got_rows.insert(key);
    if (lhs == 0) got_binding.insert(key);
  }
  auto show = [](const RowSet& s) {
    std::string out;
    for (const auto& row : s) {
      out += out.empty() ? "(" : " (";
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + short_rational(row[i]);
      out += ")";
    }
    return out;
  };
  c.check("LP constraint rows appear in the expected system",
          std::includes(rows.begin(), rows.end(), got_rows.begin(), got_rows.end()), show(got_rows));
  RowSet unrealized;
  std::set_difference(rows.begin(), rows.end(), got_rows.begin(), got_rows.end(),
                      std::inserter(unrealized, unrealized.begin()));
  if (!unrealized.empty())
    c.r.notes.push_back("expected constraint rows with no matching eigenrow here: " + show(unrealized));
  c.check("binding rows at expected point match", got_binding == binding, show(got_binding));
  c.check("expected LP point feasible", feasible);
  c.check("expected LP point optimal", lp.value && obj == *lp.value,
          "objective " + to_string(obj) + ", LP value " + (lp.value ? to_string(*lp.value) : "?"));
  bool same = lp.optimizer.size() == x.size();
  for (std::size_t b = 0; same && b < x.size(); ++b) same = lp.optimizer[b] == x[b];
  c.check("solver optimizer equals expected point", same);
  return unrealized.size();
}

void case_qeven(Ctx& c, int q) {
  int ell = 0;
  while ((1 << ell) < q) ++ell;
  const bool even = ell % 2 == 0;
  const auto g = builtin("pgl2", q);
  const Action a = select_action(g, 3);
  const DensityReport rep = run_density(c, "PGL(2," + std::to_string(q) + ")", a, c.opts);
  const std::size_t max = even ? 3 * q : q;
  expect_density(c, "PGL", rep, even ? frac(q, 2) : frac(q, 6), max);
  const SchemeView v = scheme_view(a);
  const BoundResult lp = clique_lp_bound(v.s.table, complement(v.s.table, v.edges));
  c.r.artifacts["lp"] = to_json(lp);
  c.check("LP bound meets construction", lp.value && rep.best_construction &&
                                             *lp.value == frac(static_cast<std::int64_t>(max)) &&
                                             rep.constructions[*rep.best_construction].elements.size() == max,
          "LP " + (lp.value ? to_string(*lp.value) : "?"));
  const std::int64_t Q = q;
  RowSet rows, binding;
  if (even) {
    rows = {{frac(Q - 1), frac(2 * Q)}, {frac(Q - 1), frac(-Q)}, {frac(0), frac(Q + 1)}, {frac(-(Q + 1)), frac(0)}};
    binding = {{frac(Q - 1), frac(-Q)}, {frac(-(Q + 1)), frac(0)}};
  } else {
    rows = {{frac(Q - 1), frac(0)}, {frac(0), frac(-(Q - 1))}, {frac(-(Q + 1)), frac(-2 * Q)}, {frac(-(Q + 1)), frac(Q)}};
    binding = {{frac(-(Q + 1)), frac(-2 * Q)}, {frac(-(Q + 1)), frac(Q)}};
  }
  const std::size_t missing =
      check_lp_optimizer(c, *g, v, lp, {{2, frac(1, q + 1)}, {3, even ? frac(2, q + 1) : frac(0)}}, rows, binding);
  // At q = 4 the family giving the first expected row is empty.
  if (q > 4) c.check("every expected row realized", missing == 0);
  const std::int64_t closed = even ? 3 * q : q;
  c.r.notes.push_back("closed form 3q (even l) or q (odd l) for K(q+1,3) gives " + std::to_string(closed) +
                      "; computed density is " + short_rational(rep.rho) + " (ratio " +
                      short_rational(frac(closed) / rep.rho) + ", the 3-set stabilizer order)");
}

void case_powerof3(Ctx& c) {
  const auto g = builtin("pgl2", 9);
  const Action a = select_action(g, 3);
  const DensityReport rep = run_density(c, "PGL(2,9)", a, c.opts);
  expect_density(c, "PGL", rep, frac(3), 18);
  const SchemeView v = scheme_view(a);
  const BoundResult lp = clique_lp_bound(v.s.table, complement(v.s.table, v.edges));
  c.r.artifacts["lp"] = to_json(lp);
  c.check("LP value 18", lp.value && *lp.value == frac(18), lp.value ? to_string(*lp.value) : "?");
  // Variables: involutions (order 2) then order 3.
  const RowSet rows = {{frac(9), frac(8)},  {frac(-9), frac(8)},  {frac(5), frac(0)},
                       {frac(0), frac(-10)}, {frac(45), frac(80)}};
  const RowSet binding = {{frac(-9), frac(8)}, {frac(0), frac(-10)}};
  c.check("every expected row realized",
          check_lp_optimizer(c, *g, v, lp, {{3, frac(1, 10)}, {2, frac(2, 10)}}, rows, binding) == 0);
}

void case_oddpowerof3(Ctx& c) {
  const int q = 27;
  const auto g = builtin("psl2", q);
  const Action a = select_action(g, 3);
  const SchemeView v = scheme_view(a);
  Weighting w;
  w.w.assign(v.s.table.num_classes(), frac(0));
  for (std::size_t cls : v.edges.classes) {
    const Perm& rep = g->element(v.s.classes.representatives[cls]);
    if (rep.fixed_point_count() == 2) w.w[cls] = frac(1, q);
    else if (rep.fixed_point_count() == 0 && rep.order() > 2) w.w[cls] = frac(q + 3, q * (q - 3));
  }
  const BoundResult given = ratio_bound(v.s.table, v.edges, w, g->order(), "ratio-given-weights");
  c.r.artifacts["given_weights"] = to_json(given);
  c.check("given weights give 27", given.value && *given.value == frac(27),
          given.value ? to_string(*given.value) : "?");
  c.check("d = (q^2-1)/2 - 1, tau = -1", given.d && given.tau && *given.d == frac(363) && *given.tau == frac(-1),
          (given.d ? to_string(*given.d) : "?") + ", " + (given.tau ? to_string(*given.tau) : "?"));
  const BoundResult autow = ratio_weight_search(v.s.table, v.edges, g->order());
  c.r.artifacts["auto_weights"] = to_json(autow);
  c.check("automatic weights bound <= 27", autow.floored && *autow.floored <= 27,
          autow.floored ? std::to_string(*autow.floored) : "?");
  const DensityReport rep = run_density(c, "PSL(2,27)", a, c.opts);
  expect_density(c, "PSL", rep, frac(9), 27);
  bool unip = false;
  for (const auto& con : rep.constructions)
    unip |= con.name == "subgroup:unipotent" && con.verified && con.elements.size() == 27;
  c.check("unipotent construction 27", unip);
}

void case_q1mod3(Ctx& c, int q, std::size_t nbhd) {
  const Action a = select_action(builtin("psl2", q), 3);
  const DensityReport rep = run_density(c, "PSL(2," + std::to_string(q) + ")", a, c.opts);
  expect_density(c, "PSL", rep, frac(4, 3), 4);
  c.equal("neighbourhood", rep.neighbourhood, nbhd);
}

void case_p5(Ctx& c) {
  const auto g = builtin("psl2", 25);
  bool intransitive = false;
  try {
    select_action(g, 3);
  } catch (const std::invalid_argument&) {
    intransitive = true;
  }
  c.check("PSL(2,25) intransitive on 3-sets", intransitive);
  const DensityReport rep = run_density(c, "PSL(2,25) square orbit", select_action(g, 3, "square"), c.opts);
  expect_density(c, "orbit", rep, frac(2), 12);
  c.r.notes.push_back("p = 5 value 2 is listed under q = 1 mod 3 although 5^l = 1 mod 4 makes the action "
                      "intransitive; checked only on a single 3-set orbit");
}

void case_pairs_even(Ctx& c, int q) {
  const auto g = builtin("pgl2", q);
  const Action a = select_action(g, 2);
  const DensityReport rep = run_density(c, "PGL(2," + std::to_string(q) + ") on 2-sets", a, c.opts);
  const std::int64_t max = static_cast<std::int64_t>(q) * (q - 1);
  expect_density(c, "pairs", rep, frac(q, 2), static_cast<std::size_t>(max));
  const SchemeView v = scheme_view(a);
  const auto spec = union_spectrum(v.s.table, v.edges);
  c.r.artifacts["spectrum"] = to_json(spec);
  std::set<Rational> got, want{frac(q * q * (q - 1), 2), frac(0), frac(-q * (q - 1), 2), frac(q)};
  bool exact = true;
  for (const auto& e : spec) {
    exact &= e.exact.has_value();
    if (e.exact) got.insert(*e.exact);
  }
  c.check("spectrum {q^2(q-1)/2, 0, -q(q-1)/2, q}", exact && got == want);
  const BoundResult unit = ratio_bound(v.s.table, v.edges, unit_weighting(v.s.table, v.edges), g->order());
  c.check("unit ratio bound q(q-1)", unit.value && *unit.value == frac(max),
          unit.value ? to_string(*unit.value) : "?");
}

void case_pairs_a4(Ctx& c) {
  const auto g = builtin("psl2", 7);
  const Action a = select_action(g, 2);
  const Group h = pgl::build_named_subgroup(pgl::SubgroupKind::a4, 7);
  c.check("A4 has no derangements", is_intersecting_subgroup(h, a));
  const DensityReport rep = run_density(c, "PSL(2,7) on 2-sets", a, c.opts);
  expect_density(c, "pairs", rep, frac(2), 12);
  const DerangementData der = derangement_set(a);
  CliqueOptions co;
  co.time_limit = c.opts.time_limit;
  co.threads = c.opts.deterministic ? 1 : c.opts.threads;
  co.deterministic = c.opts.deterministic;
  const CliqueResult res = max_intersecting_set(a, der, co);
  c.check("solver certifies 12 without a bound hint",
          res.size == 12 && res.optimal && !res.optimal_by_bound &&
              is_intersecting_set(perms_of(*g, res.certificate), a),
          "size " + std::to_string(res.size));
}

void case_pairs_a5(Ctx& c) {
  const auto g = builtin("psl2", 31);
  const Action a = select_action(g, 2);
  const Group h = pgl::build_named_subgroup(pgl::SubgroupKind::a5, 31);
  c.equal("A5 order", h.order(), std::size_t{60});
  c.check("A5 has no derangements", is_intersecting_subgroup(h, a));
  const Rational lower = density_of(h.order(), a.domain_size(), g->order());
  c.r.artifacts["density_lower_bound"] = to_string(lower);
  c.check("density >= 2", lower >= frac(2), to_string(lower));
  c.r.notes.push_back("exact search is optional here and not run by default");
}

void case_example15(Ctx& c) {
  std::vector<Perm> set;
  for (const auto& s : example15_cycles()) set.push_back(Perm::from_cycles(s, 10));
  const auto h = std::make_shared<const Group>(group_closure(set, "<example>"));
  c.equal("closure order", h->order(), std::size_t{360});
  const Action full = induce_ksets(h, 3);
  const auto orbs = action_orbits(full);
  c.equal("3-set orbits", orbs.size(), std::size_t{2});
  std::optional<std::size_t> hit;
  for (std::size_t o = 0; o < orbs.size(); ++o)
    if (is_intersecting_set(set, restrict_to_orbit(full, o))) hit = o;
  if (c.check("intersecting on one orbit", hit.has_value())) {
    const Rational rho = density_of(set.size(), orbs[*hit].size(), h->order());
    c.r.artifacts["density_lower_bound"] = to_string(rho);
    c.check("density >= 5/2", rho >= frac(5, 2), to_string(rho));
  }

  // Relabel into the built PSL(2,9), fixing points 0 and 1.
  const auto psl = builtin("psl2", 9);
  std::vector<Point> phi(10);
  std::iota(phi.begin(), phi.end(), Point{0});
  std::optional<std::vector<Perm>> mapped;
  do {
    std::vector<Perm> img;
    for (const auto& x : set) {
      std::vector<Point> m(10);
      for (Point i = 0; i < 10; ++i) m[phi[i]] = phi[x(i)];
      Perm y(std::move(m));
      if (!psl->contains(y)) break;
      img.push_back(std::move(y));
    }
    if (img.size() == set.size()) mapped = std::move(img);
  } while (!mapped && std::next_permutation(phi.begin() + 2, phi.end()));
  if (!c.check("relabels into PSL(2,9)", mapped.has_value())) return;
  std::string which;
  for (const char* sign : {"square", "nonsquare"})
    if (is_intersecting_set(*mapped, select_action(psl, 3, sign))) which = sign;
  c.check("intersecting on a sign orbit of PSL(2,9)", !which.empty(), which);
  c.r.artifacts["orbit"] = which;
}

void case_table4(Ctx& c, int q, std::size_t max, const Rational& psl_rho, const Rational& pgl_rho) {
  const DensityReport psl =
      run_density(c, "PSL(2," + std::to_string(q) + ") square orbit", select_action(builtin("psl2", q), 3, "square"),
                  c.opts);
  c.check("orbit max >= " + std::to_string(max), psl.lower >= max, std::to_string(psl.lower));
  c.check("orbit density >= " + to_string(psl_rho), psl.rho >= psl_rho, to_string(psl.rho));
  c.equal<std::string>("orbit status", psl.status, "exact");
  const DensityReport pgl = run_density(c, "PGL(2," + std::to_string(q) + ")", select_action(builtin("pgl2", q), 3),
                                        c.opts);
  c.equal_q("PGL: rho", pgl.rho, pgl_rho);
  c.equal<std::string>("PGL: status", pgl.status, "exact");
  c.r.artifacts["row"] = {{"q", q},
                          {"max_found", psl.lower},
                          {"psl_density", to_string(psl.rho)},
                          {"psl_status", psl.status},
                          {"pgl_density", to_string(pgl.rho)}};
}

std::vector<std::size_t> non_derangements(const Action& a) {
  std::vector<std::size_t> out;
  const DerangementData d = derangement_set(a);
  for (std::size_t i = 0; i < d.is_derangement.size(); ++i)
    if (!d.is_derangement[i]) out.push_back(i);
  return out;
}

void case_join(Ctx& c, int q) {
  const auto psl = builtin("psl2", q);
  const auto pgl = builtin("pgl2", q);
  std::shared_ptr<const Group> sig;
  if (pgl::line_for(q).field().k % 2 == 0) sig = builtin("psl-sigma", q);
  std::set<Perm> non_pgl;
  for (const auto& grp : {pgl, sig}) {
    if (!grp) continue;
    const Action a = induce_ksets(grp, 3);
    bool ok = true;
    std::set<Perm> nd;
    for (std::size_t i : non_derangements(a)) nd.insert(grp->element(i));
    for (const auto& x : grp->elements())
      if (!psl->contains(x) && a.fixes_some(x)) ok = false;
    c.check(grp->name() + ": elements outside PSL are derangements", ok);
    if (grp == pgl) non_pgl = nd;
    else c.check("non-derangements of PGL and " + grp->name() + " coincide", nd == non_pgl);
  }
  const Action full = induce_ksets(psl, 3);
  const auto orbs = action_orbits(full);
  const auto [sq, ns] = split_3set_orbits(q);
  auto as_sets = [](const Action& a) {
    std::set<KSet> s(a.domain().begin(), a.domain().end());
    return s;
  };
  std::set<std::set<KSet>> split{as_sets(sq), as_sets(ns)}, perm_orbs;
  for (const auto& o : orbs) {
    std::set<KSet> s;
    for (std::size_t i : o) s.insert(full.domain()[i]);
    perm_orbs.insert(std::move(s));
  }
  c.check("sign split matches orbits", split == perm_orbs,
          std::to_string(sq.domain_size()) + " + " + std::to_string(ns.domain_size()));
  if (sig) {
    const DensityReport a = run_density(c, pgl->name(), induce_ksets(pgl, 3), c.opts);
    const DensityReport b = run_density(c, sig->name(), induce_ksets(sig, 3), c.opts);
    c.check("equal densities", a.rho == b.rho && a.status == "exact" && b.status == "exact",
            to_string(a.rho) + " vs " + to_string(b.rho));
  }
}

void case_table5(Ctx& c, int n, const std::string& want) {
  const Catalog cat = load_catalog(data_dir() / "catalogs" / ("k" + std::to_string(n) + "_3.json"));
  const DensityArray arr = density_array(cat, c.opts);
  c.equal<std::string>(cat.name + " array", format_array(arr), want);
  c.check("all computed entries exact", arr.complete);
  bool marked = true, builtin_computed = true;
  for (std::size_t i = 0; i < cat.groups.size(); ++i) {
    const auto& rep = arr.reports[i];
    if (cat.groups[i].known_density) marked &= rep.provenance == "annotated-from-literature";
    if (cat.groups[i].group && cat.groups[i].group->tag("family")) builtin_computed &= rep.provenance == "computed";
    if (rep.provenance == "computed") c.check(rep.group_name + ": rho >= 1", rep.rho >= frac(1), to_string(rep.rho));
  }
  c.check("annotated entries marked", marked);
  c.check("q-derived entries computed", builtin_computed);
  c.r.arrays.push_back(arr);
}

struct Entry {
  std::string id;
  std::string title;
  std::function<void(Ctx&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    for (int q : {4, 8, 16})
      e.push_back({"qeven-" + std::to_string(q), "PGL(2," + std::to_string(q) + ") on 3-sets",
                   [q](Ctx& c) { case_qeven(c, q); }});
    e.push_back({"powerof3-9", "PGL(2,9) on 3-sets", case_powerof3});
    e.push_back({"oddpowerof3-27", "PSL(2,27) on 3-sets, weighted ratio bound", case_oddpowerof3});
    e.push_back({"q1mod3-7", "PSL(2,7) on 3-sets", [](Ctx& c) { case_q1mod3(c, 7, 56); }});
    e.push_back({"q1mod3-19", "PSL(2,19) on 3-sets", [](Ctx& c) { case_q1mod3(c, 19, 380); }});
    e.push_back({"p5-25", "PSL(2,25), p = 5 reading on one orbit", case_p5});
    e.push_back({"pairs-even-4", "PGL(2,4) on 2-sets", [](Ctx& c) { case_pairs_even(c, 4); }});
    e.push_back({"pairs-even-8", "PGL(2,8) on 2-sets", [](Ctx& c) { case_pairs_even(c, 8); }});
    e.push_back({"pairs-a4-7", "PSL(2,7) on 2-sets, A4", case_pairs_a4});
    e.push_back({"pairs-a5-31", "PSL(2,31) on 2-sets, A5", case_pairs_a5});
    e.push_back({"psl9-example15", "15-element intersecting set of PSL(2,9)", case_example15});
    e.push_back({"table4-q5", "PSL(2,5) on one 3-set orbit", [](Ctx& c) { case_table4(c, 5, 12, frac(2), frac(2)); }});
    e.push_back({"table4-q9", "PSL(2,9) on one 3-set orbit",
                 [](Ctx& c) { case_table4(c, 9, 15, frac(5, 2), frac(3)); }});
    e.push_back({"table4-q13", "PSL(2,13) on one 3-set orbit",
                 [](Ctx& c) { case_table4(c, 13, 12, frac(2), frac(2)); }});
    e.push_back({"table4-q17", "PSL(2,17) on one 3-set orbit",
                 [](Ctx& c) { case_table4(c, 17, 12, frac(2), frac(2)); }});
    for (int q : {5, 9, 13})
      e.push_back({"join-" + std::to_string(q), "groups above PSL(2," + std::to_string(q) + ") on 3-sets",
                   [q](Ctx& c) { case_join(c, q); }});
    e.push_back({"table5-k7", "K(7,3) array", [](Ctx& c) { case_table5(c, 7, "[1]"); }});
    e.push_back({"table5-k8", "K(8,3) array", [](Ctx& c) { case_table5(c, 8, "[1, 4/3]"); }});
    e.push_back({"table5-k9", "K(9,3) array", [](Ctx& c) { case_table5(c, 9, "[1, 4/3]"); }});
    e.push_back({"table5-k10", "K(10,3) array", [](Ctx& c) { case_table5(c, 10, "[1, 3]"); }});
    return e;
  }();
  return entries;
}

}  // namespace

const std::vector<std::string>& example15_cycles() {
  static const std::vector<std::string> cycles = {
      "()",
      "(1,2)(5,10)(6,9)(7,8)",  "(1,2)(3,4)(5,7)(8,10)",
      "(1,10)(2,7)(3,6)(5,8)",  "(1,7)(2,10)(4,9)(5,8)",
      "(1,5)(2,8)(4,6)(7,10)",  "(1,8)(2,5)(3,9)(7,10)",
      "(1,4,2)(5,8,6)(7,10,9)", "(1,2,4)(5,6,8)(7,9,10)",
      "(1,6,2)(3,10,7)(4,5,8)", "(1,2,6)(3,7,10)(4,8,5)",
      "(1,3,2)(5,9,8)(6,10,7)", "(1,2,3)(5,8,9)(6,7,10)",
      "(1,9,2)(3,8,5)(4,7,10)", "(1,2,9)(3,5,8)(4,10,7)",
  };
  return cycles;
}

std::vector<std::string> case_ids() {
  std::vector<std::string> ids;
  for (const auto& e : registry()) ids.push_back(e.id);
  return ids;
}

bool has_case(const std::string& id) {
  const auto& r = registry();
  return std::any_of(r.begin(), r.end(), [&](const Entry& e) { return e.id == id; });
}

CaseResult run_case(const std::string& id, const DensityOptions& opts) {
  const auto& reg = registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const Entry& e) { return e.id == id; });
  if (it == reg.end()) throw std::invalid_argument("unknown case '" + id + "'");
  CaseResult r;
  r.id = it->id;
  r.title = it->title;
  const auto t0 = std::chrono::steady_clock::now();
  Ctx c{r, opts};
  try {
    it->run(c);
  } catch (const std::exception& e) {
    c.check("completed", false, e.what());
  }
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CaseResult> run_cases(const std::vector<std::string>& ids, const DensityOptions& opts,
                                  unsigned workers) {
  for (const auto& id : ids)
    if (!has_case(id)) throw std::invalid_argument("unknown case '" + id + "'");
  std::vector<CaseResult> out(ids.size());
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(ids.size())));
  // Cases share the worker budget; each runs its search single-threaded.
  DensityOptions inner = opts;
  if (workers > 1) inner.threads = 1;
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < ids.size();) out[i] = run_case(ids[i], inner);
      });
  }
  return out;
}

nlohmann::json to_json(const CaseResult& c, bool with_timing) {
  nlohmann::json j;
  j["id"] = c.id;
  j["title"] = c.title;
  j["passed"] = c.passed();
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& k : c.checks) checks.push_back({{"name", k.name}, {"passed", k.passed}, {"detail", k.detail}});
  j["checks"] = checks;
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& r : c.reports) reps.push_back(to_json(r, with_timing));
  j["reports"] = reps;
  if (!c.arrays.empty()) {
    nlohmann::json arrs = nlohmann::json::array();
    for (const auto& a : c.arrays) arrs.push_back(to_json(a, with_timing));
    j["arrays"] = arrs;
  }
  j["artifacts"] = c.artifacts;
  if (!c.notes.empty()) j["notes"] = c.notes;
  if (with_timing) j["elapsed_seconds"] = c.elapsed;
  return j;
}

namespace {

std::vector<nlohmann::json> orbit_rows(const std::vector<CaseResult>& results) {
  std::vector<nlohmann::json> rows;
  for (const auto& c : results)
    if (c.id.rfind("table4-", 0) == 0 && c.artifacts.contains("row")) rows.push_back(c.artifacts["row"]);
  std::sort(rows.begin(), rows.end(),
            [](const nlohmann::json& a, const nlohmann::json& b) { return a["q"].get<int>() < b["q"].get<int>(); });
  return rows;
}

std::string short_of(const nlohmann::json& s) { return short_rational(parse_rational(s.get<std::string>())); }

}  // namespace

std::string orbit_table_csv(const std::vector<CaseResult>& results) {
  std::ostringstream os;
  os << "q,max_found,psl_orbit_density,pgl_density\n";
  for (const auto& r : orbit_rows(results))
    os << r["q"].get<int>() << ',' << r["max_found"].get<std::size_t>() << ',' << short_of(r["psl_density"]) << ','
       << short_of(r["pgl_density"]) << '\n';
  return os.str();
}

std::string orbit_table_markdown(const std::vector<CaseResult>& results) {
  std::ostringstream os;
  os << "| q | Max. intersecting set found | Density of PSL(2,q) on one orbit | Density of PGL(2,q) |\n"
     << "|---|---|---|---|\n";
  for (const auto& r : orbit_rows(results))
    os << "| " << r["q"].get<int>() << " | " << r["max_found"].get<std::size_t>() << " | "
       << short_of(r["psl_density"]) << " | " << short_of(r["pgl_density"]) << " |\n";
  return os.str();
}

}  // namespace kdensity
