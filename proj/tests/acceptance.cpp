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

// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <sstream>

#include "kdensity/cases.hpp"
#include "kdensity/pgl.hpp"
#include "oracle.hpp"

using namespace kdensity;

namespace {

struct Line {
  bool ok = true;
  std::vector<std::string> why;

  void need(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why.push_back(what);
    }
  }
};

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
  return out;
}

std::string failed_checks(const CaseResult& r) {
  std::vector<std::string> names;
  for (const auto& c : r.checks)
    if (!c.passed) names.push_back(c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  return join(names);
}

void require_cases(Line& l, const std::map<std::string, CaseResult>& res, const std::vector<std::string>& ids,
                   double each_limit) {
  for (const auto& id : ids) {
    const auto it = res.find(id);
    if (it == res.end()) {
      l.need(false, id + " missing");
      continue;
    }
    l.need(it->second.passed(), id + ": " + failed_checks(it->second));
    if (each_limit > 0) {
      std::ostringstream os;
      os << id << " took " << it->second.elapsed << " s";
      l.need(it->second.elapsed < each_limit, os.str());
    }
  }
}

// Spectral oracle over one group.
void spectral(Line& l, const Group& g, std::size_t& compared) {
  const SchemeData s = build_scheme(g);
  std::vector<ClassSelection> selections;
  auto from_flags = [&](const DerangementData& d) {
    ClassSelection t;
    for (std::size_t c = 1; c < s.classes.size(); ++c)
      if (d.class_is_derangement[c]) t.classes.push_back(c);
    if (!t.classes.empty()) selections.push_back(t);
    selections.push_back(complement(s.table, t));
  };
  const auto gp = std::make_shared<const Group>(g);
  for (std::size_t k : {2u, 3u}) {
    if (k >= g.degree()) continue;
    const Action full = induce_ksets(gp, k);
    from_flags(derangement_set(full, &s.classes));
    if (!full.transitive()) {
      const std::size_t orbits = action_orbits(full).size();
      for (std::size_t o = 0; o < orbits; ++o) from_flags(derangement_set(restrict_to_orbit(full, o), &s.classes));
    }
  }
  for (const auto& t : selections) {
    if (t.classes.empty()) continue;
    std::vector<char> conn(g.order(), 0);
    for (std::size_t c : t.classes)
      for (std::size_t e : s.classes.classes[c]) conn[e] = 1;
    const auto dense = oracle::cayley_spectrum(g, conn);
    const auto ours = oracle::expand(union_spectrum(s.table, t));
    bool same = dense.size() == ours.size();
    for (std::size_t i = 0; same && i < dense.size(); ++i) same = std::abs(dense[i] - ours[i]) < 1e-8;
    l.need(same, g.name() + ": spectrum mismatch");
    ++compared;
  }
}

std::string show(const Rational& r) { return short_rational(r); }

}  // namespace

int main() {
  DensityOptions opts;
  opts.deterministic = true;

  std::map<std::string, CaseResult> res;
  for (const auto& id : case_ids()) {
    std::cerr << "running " << id << "..." << std::endl;
    res.emplace(id, run_case(id, opts));
  }

  std::vector<std::pair<std::string, Line>> lines;

  Line c1;
  require_cases(c1, res, {"qeven-4", "qeven-8", "qeven-16"}, 120);
  lines.emplace_back("1 PGL(2,q), q even, 3-sets: rho 2, 4/3, 8; LP bound meets construction", c1);

  Line c2;
  require_cases(c2, res, {"powerof3-9"}, 30);
  lines.emplace_back("2 PGL(2,9) 3-sets: rho 3, max 18, LP optimizer (1/10, 2/10)", c2);

  Line c3;
  require_cases(c3, res, {"oddpowerof3-27"}, 300);
  lines.emplace_back("3 PSL(2,27) 3-sets: weighted ratio bound 27, rho 9", c3);

  Line c4;
  require_cases(c4, res, {"q1mod3-7", "q1mod3-19"}, 60);
  lines.emplace_back("4 PSL(2,q), q = 7, 19, 3-sets: max 4, rho 4/3", c4);

  Line c5;
  require_cases(c5, res, {"pairs-even-4", "pairs-even-8"}, 60);
  lines.emplace_back("5 PGL(2,q), q = 4, 8, 2-sets: rho q/2, spectrum, tight ratio bound", c5);

  Line c6;
  require_cases(c6, res, {"pairs-a4-7", "pairs-a5-31"}, 60);
  lines.emplace_back("6 PSL(2,7) and PSL(2,31) on 2-sets: A4, A5 derangement free, rho 2 at q = 7", c6);

  Line c7;
  require_cases(c7, res, {"psl9-example15"}, 0);
  lines.emplace_back("7 the 15 listed PSL(2,9) permutations intersect on one orbit", c7);

  Line c8;
  require_cases(c8, res, {"table4-q5", "table4-q9", "table4-q13", "table4-q17"}, 0);
  double t8 = 0;
  for (const char* id : {"table4-q5", "table4-q9", "table4-q13", "table4-q17"})
    if (res.count(id)) t8 += res.at(id).elapsed;
  c8.need(t8 < 600, "orbit table took " + std::to_string(t8) + " s");
  lines.emplace_back("8 orbit table: 12 at q = 5, 13, 17; q = 9 at least 15 with exact optimum", c8);

  Line c9;
  require_cases(c9, res, {"join-5", "join-9", "join-13"}, 0);
  lines.emplace_back("9 groups above PSL(2,q): outer cosets derange 3-sets, orbit split by sign", c9);

  Line c10;
  std::size_t compared = 0, groups = 0;
  {
    std::vector<Group> built;
    for (int q : {4, 5, 7, 8, 9}) built.push_back(pgl::build_pgl2(q));
    for (int q : {5, 7, 9, 11}) built.push_back(pgl::build_psl2(q));
    built.push_back(pgl::build_psl_sigma(9));
    for (int n : {7, 8, 9, 10}) {
      const Catalog cat = load_catalog(data_dir() / "catalogs" / ("k" + std::to_string(n) + "_3.json"));
      for (const auto& cg : cat.groups)
        if (cg.group && cg.group->order() <= 1000) built.push_back(*cg.group);
    }
    for (const auto& g : built) {
      if (g.order() > 1000) continue;
      ++groups;
      spectral(c10, g, compared);
    }
  }
  c10.need(compared > 0, "nothing compared");
  lines.emplace_back("10 spectral oracle: " + std::to_string(compared) + " selections over " + std::to_string(groups) +
                         " groups of order <= 1000 match dense spectra within 1e-8",
                     c10);

  Line c11;
  require_cases(c11, res, {"table5-k7", "table5-k8", "table5-k9", "table5-k10"}, 0);
  lines.emplace_back("11 arrays for K(7,3) to K(10,3): [1], [1, 4/3], [1, 4/3], [1, 3]", c11);

  Line c12;
  {
    // rho >= 1, sandwich and certificate checks recorded by every case.
    std::size_t seen = 0;
    for (const auto& [id, r] : res)
      for (const auto& c : r.checks) {
        const bool prop = c.name.find(": sandwich") != std::string::npos ||
                          c.name.find(": certificate") != std::string::npos ||
                          c.name.find(": rho >= 1") != std::string::npos;
        if (!prop) continue;
        ++seen;
        c12.need(c.passed, id + " " + c.name);
      }
    c12.need(seen > 0, "no property checks recorded");
    // rho |G| / n is the size of a set, so an integer.
    for (const auto& [id, r] : res)
      for (const auto& rep : r.reports) {
        if (rep.provenance != "computed") continue;
        const Rational size = rep.rho * make_rational(static_cast<std::int64_t>(rep.order)) /
                              make_rational(static_cast<std::int64_t>(rep.n));
        c12.need(boost::multiprecision::denominator(size) == 1, id + ": rho |G| / n not an integer");
      }
    // A transitive subgroup has density at least that of the group: PSL inside PGL.
    for (auto [q, k] : {std::pair{7, 3}, {11, 3}, {19, 3}, {27, 3}, {7, 2}}) {
      const auto s = std::make_shared<const Group>(pgl::build_psl2(q));
      const auto g = std::make_shared<const Group>(pgl::build_pgl2(q));
      const DensityReport rs = compute_density(select_action(s, static_cast<std::size_t>(k)), opts);
      const DensityReport rg = compute_density(select_action(g, static_cast<std::size_t>(k)), opts);
      const std::string tag = "q=" + std::to_string(q) + " k=" + std::to_string(k);
      c12.need(rs.status == "exact" && rg.status == "exact", tag + ": not exact");
      c12.need(rg.rho <= rs.rho, tag + ": PGL " + show(rg.rho) + " > PSL " + show(rs.rho));
    }
    // Catalog pairs with verified containment.
    std::size_t pairs = 0;
    for (const char* id : {"table5-k7", "table5-k8", "table5-k9", "table5-k10"}) {
      if (!res.count(id) || res.at(id).arrays.empty()) continue;
      const auto& arr = res.at(id).arrays.front();
      const std::string n = std::string(id).substr(std::string("table5-k").size());
      const Catalog cat = load_catalog(data_dir() / "catalogs" / ("k" + n + "_3.json"));
      for (std::size_t h = 0; h < cat.groups.size(); ++h)
        for (std::size_t g = 0; g < cat.groups.size(); ++g) {
          const auto& H = cat.groups[h];
          const auto& G = cat.groups[g];
          if (h == g || !G.group || !H.group || H.group->order() >= G.group->order()) continue;
          bool inside = true;
          for (const auto& x : H.generators) inside &= G.group->contains(x);
          if (!inside) continue;
          ++pairs;
          const auto& rh = arr.reports[h];
          const auto& rg = arr.reports[g];
          c12.need(rg.rho <= rh.rho, G.name + " over " + H.name + ": " + show(rg.rho) + " > " + show(rh.rho));
        }
    }
    c12.need(pairs > 0, "no catalog containments found");
  }
  lines.emplace_back("12 properties: monotonicity, rho >= 1, sandwich, certificates", c12);

  bool all = true;
  for (const auto& [name, l] : lines) {
    all &= l.ok;
    std::cout << (l.ok ? "PASS " : "FAIL ") << name;
    if (!l.ok) std::cout << " -- " << join(l.why);
    std::cout << '\n';
  }
  return all ? 0 : 1;
}
