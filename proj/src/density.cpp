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

#include "kdensity/density.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "kdensity/group_io.hpp"
#include "kdensity/pgl.hpp"
#include "kdensity/scheme.hpp"

namespace kdensity {

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("KDENSITY_DATA")) return env;
#ifdef KDENSITY_DATA_DIR
  return KDENSITY_DATA_DIR;
#else
  return "data";
#endif
}

Group build_builtin(const std::string& kind, int q) {
  if (kind == "pgl2") return pgl::build_pgl2(q);
  if (kind == "psl2") return pgl::build_psl2(q);
  if (kind == "psl-sigma") return pgl::build_psl_sigma(q);
  throw std::invalid_argument("unknown builtin group '" + kind + "'");
}

Action select_action(std::shared_ptr<const Group> g, std::size_t k, const std::optional<std::string>& orbit) {
  const Action full = induce_ksets(std::move(g), k);
  if (!orbit) {
    if (!full.transitive())
      throw std::invalid_argument(full.group().name() + " is not transitive on " + full.descriptor() +
                                  " (" + std::to_string(action_orbits(full).size()) +
                                  " orbits); choose one with --orbit");
    return full;
  }
  if (*orbit == "square") return select_orbit_by_sign(full, pgl::TripleSign::square);
  if (*orbit == "nonsquare") return select_orbit_by_sign(full, pgl::TripleSign::nonsquare);
  std::size_t idx = 0;
  try {
    std::size_t used = 0;
    idx = std::stoul(*orbit, &used);
    if (used != orbit->size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("orbit selector must be square, nonsquare or an index, got '" + *orbit + "'");
  }
  return restrict_to_orbit(full, idx);
}

Rational density_of(std::size_t set_size, std::size_t n, std::size_t order) {
  return Rational(static_cast<long long>(set_size)) * Rational(static_cast<long long>(n)) /
         Rational(static_cast<long long>(order));
}

namespace {

std::vector<std::size_t> translate_to_identity(const Group& g, std::vector<std::size_t> set) {
  if (set.empty()) return set;
  const std::size_t inv = g.inverse_index(set.front());
  for (auto& e : set) e = g.product_index(e, inv);
  std::sort(set.begin(), set.end());
  return set;
}

bool verify_set(const Action& a, const std::vector<std::size_t>& set) {
  std::vector<Perm> perms;
  for (std::size_t i : set) perms.push_back(a.group().element(i));
  return is_intersecting_set(perms, a);
}

void add_construction(const Action& a, DensityReport& r, std::string name, std::vector<std::size_t> set) {
  Construction c;
  c.name = std::move(name);
  c.elements = translate_to_identity(a.group(), std::move(set));
  c.verified = verify_set(a, c.elements);
  if (!c.verified) r.notes.push_back("construction " + c.name + " failed verification and was discarded");
  r.constructions.push_back(std::move(c));
}

void subgroup_constructions(const Action& a, const DerangementData& der, DensityReport& r) {
  const Group& g = a.group();
  const auto family = g.tag("family");
  const auto qtag = g.tag("q");
  if (!family || !qtag) return;
  const int q = std::stoi(*qtag);
  const pgl::SubgroupKind kinds[] = {pgl::SubgroupKind::unipotent, pgl::SubgroupKind::unipotent_c3,
                                     pgl::SubgroupKind::unipotent_pm, pgl::SubgroupKind::a4,
                                     pgl::SubgroupKind::a5};
  for (auto kind : kinds) {
    if (!pgl::subgroup_applicable(kind, q)) continue;
    Group h;
    try {
      h = pgl::build_named_subgroup(kind, q);
    } catch (const std::logic_error& e) {
      r.notes.push_back(e.what());
      continue;
    }
    std::vector<std::size_t> idx;
    bool inside = true;
    for (const auto& x : h.elements()) {
      const auto i = g.index_of(x);
      if (!i) {
        inside = false;
        break;
      }
      idx.push_back(*i);
    }
    if (!inside) continue;
    const bool free = std::none_of(idx.begin(), idx.end(), [&](std::size_t i) { return der.is_derangement[i]; });
    if (free) {
      add_construction(a, r, "subgroup:" + pgl::to_string(kind), idx);
    } else if (kind == pgl::SubgroupKind::a4 || kind == pgl::SubgroupKind::a5) {
      std::vector<char> conn(g.order());
      for (std::size_t i = 0; i < conn.size(); ++i) conn[i] = !der.is_derangement[i];
      conn[0] = 0;
      CliqueOptions o;
      o.deterministic = true;
      o.time_limit = 60;
      const auto res = max_clique(GraphView::cayley(g, idx, conn), o);
      add_construction(a, r, "subset-of:" + pgl::to_string(kind), res.certificate);
    }
  }
}

}  // namespace

DensityReport compute_density(const Action& a, const DensityOptions& opts) {
  const Group& g = a.group();
  if (!a.transitive())
    throw std::invalid_argument("compute_density: " + g.name() + " is not transitive on " + a.descriptor());
  DensityReport r;
  r.group_name = g.name();
  r.group_tags = g.tags();
  r.order = g.order();
  r.degree = g.degree();
  r.action = a.descriptor();
  r.n = a.domain_size();
  if (r.order % r.n != 0) throw std::logic_error("orbit length does not divide the group order");
  r.stabilizer = r.order / r.n;
  const unsigned threads = opts.deterministic ? 1u : std::max(1u, opts.threads);

  const ClassPartition cp = conjugacy_classes(g);
  const DerangementData der = derangement_set(a, &cp, threads);
  r.derangements = der.count;
  r.neighbourhood = r.order - der.count - 1;

  if (opts.constructions) {
    std::vector<std::size_t> stab;
    for (std::size_t i = 0; i < g.order(); ++i)
      if (a.fixes(g.element(i), 0)) stab.push_back(i);
    add_construction(a, r, "stabilizer", stab);
    subgroup_constructions(a, der, r);
    add_construction(a, r, "greedy", greedy_intersecting_set(a, der));
  }
  r.lower = 1;
  for (std::size_t i = 0; i < r.constructions.size(); ++i) {
    const auto& c = r.constructions[i];
    if (c.verified && c.elements.size() > r.lower) {
      r.lower = c.elements.size();
      r.best_construction = i;
    } else if (c.verified && !r.best_construction) {
      r.best_construction = i;
    }
  }

  r.upper = static_cast<std::int64_t>(r.neighbourhood + 1);
  if (opts.bounds) {
    const CollapsedAlgebra ca = class_constants(g, cp);
    const EigenTable et = eigenrows(ca, cp, rational_classes(g, cp));
    ClassSelection edges;
    for (std::size_t c = 1; c < cp.size(); ++c)
      if (der.class_is_derangement[c]) edges.classes.push_back(c);
    r.bounds = coclique_bound(et, edges, g.order());
    r.upper = std::min(r.upper, *r.bounds->best.floored);
  }

  if (opts.search && static_cast<std::int64_t>(r.lower) < r.upper) {
    CliqueOptions co;
    co.time_limit = opts.time_limit;
    co.threads = threads;
    co.deterministic = opts.deterministic;
    co.upper_bound = static_cast<std::size_t>(r.upper);
    std::vector<std::size_t> initial;
    if (r.best_construction) initial = r.constructions[*r.best_construction].elements;
    CliqueResult res = max_intersecting_set(a, der, co, initial);
    if (!verify_set(a, res.certificate))
      throw std::logic_error("solver certificate failed independent verification");
    r.lower = std::max(r.lower, res.size);
    if (res.optimal) r.upper = static_cast<std::int64_t>(res.size);
    if (!res.optimal) r.notes.push_back("search stopped at the time limit");
    r.exact = std::move(res);
  }
  if (static_cast<std::int64_t>(r.lower) > r.upper)
    throw std::logic_error("lower bound exceeds upper bound for " + r.group_name);
  r.status = static_cast<std::int64_t>(r.lower) == r.upper ? "exact" : "interval";
  r.rho = density_of(r.lower, r.n, r.order);
  r.rho_upper = density_of(static_cast<std::size_t>(r.upper), r.n, r.order);
  return r;
}

nlohmann::json to_json(const DensityReport& r, bool with_timing) {
  nlohmann::json j;
  j["case"] = r.case_id;
  j["group"] = {{"name", r.group_name}, {"order", r.order}, {"degree", r.degree}, {"tags", r.group_tags}};
  j["action"] = r.action;
  j["N"] = r.n;
  j["order"] = r.order;
  j["stabilizer"] = r.stabilizer;
  j["provenance"] = r.provenance;
  if (r.provenance != "computed") {
    j["rho"] = to_string(r.rho);
    j["status"] = r.status;
    return j;
  }
  j["derangements"] = r.derangements;
  j["neighbourhood"] = r.neighbourhood;
  nlohmann::json cons = nlohmann::json::array();
  for (const auto& c : r.constructions)
    cons.push_back({{"name", c.name}, {"size", c.elements.size()}, {"verified", c.verified}});
  nlohmann::json best;
  if (r.best_construction) {
    const auto& c = r.constructions[*r.best_construction];
    best = {{"name", c.name}, {"size", c.elements.size()}, {"candidates", cons}};
  } else {
    best = {{"candidates", cons}};
  }
  j["construction"] = best;
  nlohmann::json bounds = nlohmann::json::array();
  if (r.bounds) {
    for (const auto& b : r.bounds->candidates) bounds.push_back(to_json(b));
    j["best_bound"] = r.bounds->best.method;
  }
  j["bounds"] = bounds;
  if (r.exact) {
    const auto& e = *r.exact;
    j["exact"] = {{"size", e.size}, {"optimal", e.optimal}, {"optimal_by_bound", e.optimal_by_bound},
                  {"nodes", e.nodes}};
    if (with_timing) j["exact"]["elapsed_seconds"] = e.elapsed;
  } else {
    j["exact"] = nullptr;
  }
  j["max_intersecting"] = {{"lower", r.lower}, {"upper", r.upper}};
  j["rho"] = to_string(r.rho);
  if (r.status != "exact") j["rho_interval"] = {to_string(r.rho), to_string(r.rho_upper)};
  j["status"] = r.status;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

namespace {

bool transitive_on_ksets(const std::vector<Perm>& gens, std::size_t n, std::size_t k) {
  std::vector<Perm> induced;
  for (const auto& g : gens) induced.push_back(induced_perm(g, k));
  return orbits(induced, binomial(n, k)).size() == 1;
}

}  // namespace

Catalog load_catalog(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw std::runtime_error("cannot open catalog " + manifest.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("catalog " + manifest.string() + ": " + e.what());
  }
  Catalog c;
  c.name = j.at("name").get<std::string>();
  c.n = j.at("n").get<std::size_t>();
  c.k = j.at("k").get<std::size_t>();
  for (const auto& e : j.at("groups")) {
    CatalogGroup cg;
    if (e.contains("builtin")) {
      auto g = std::make_shared<const Group>(build_builtin(e.at("builtin").get<std::string>(), e.at("q").get<int>()));
      cg.name = g->name();
      cg.degree = g->degree();
      cg.generators.assign(g->generators().begin(), g->generators().end());
      cg.group = std::move(g);
    } else if (e.contains("file")) {
      const GroupFile f = read_group_file(manifest.parent_path() / e.at("file").get<std::string>());
      cg.name = f.name;
      cg.degree = f.degree;
      cg.generators = f.generators;
      if (auto it = f.annotations.find("known_density"); it != f.annotations.end()) {
        cg.known_density = parse_rational(it->second);
        if (auto s = f.annotations.find("source"); s != f.annotations.end()) cg.source = s->second;
      } else {
        cg.group = std::make_shared<const Group>(materialize(f));
      }
    } else {
      throw std::runtime_error("catalog entry needs \"builtin\" or \"file\"");
    }
    if (cg.degree != c.n)
      throw std::runtime_error("catalog group " + cg.name + " has degree " + std::to_string(cg.degree) +
                               ", expected " + std::to_string(c.n));
    c.groups.push_back(std::move(cg));
  }
  return c;
}

DensityArray density_array(const Catalog& catalog, const DensityOptions& opts) {
  DensityArray arr;
  arr.name = catalog.name;
  for (const auto& cg : catalog.groups) {
    if (!transitive_on_ksets(cg.generators, catalog.n, catalog.k))
      throw std::invalid_argument("catalog group " + cg.name + " is not transitive on " +
                                  std::to_string(catalog.k) + "-sets");
    DensityReport r;
    if (cg.known_density) {
      r.group_name = cg.name;
      r.degree = cg.degree;
      r.action = std::to_string(catalog.k) + "-sets";
      r.n = binomial(catalog.n, catalog.k);
      r.rho = *cg.known_density;
      r.status = "exact";
      r.provenance = "annotated-from-literature";
      if (!cg.source.empty()) r.notes.push_back(cg.source);
    } else {
      r = compute_density(induce_ksets(cg.group, catalog.k), opts);
      if (r.status != "exact") arr.complete = false;
    }
    r.case_id = catalog.name;
    auto it = std::find_if(arr.entries.begin(), arr.entries.end(),
                           [&](const ArrayEntry& e) { return e.value == r.rho; });
    if (it == arr.entries.end()) {
      arr.entries.push_back({r.rho, {}, {}});
      it = arr.entries.end() - 1;
    }
    it->witnesses.push_back(cg.name);
    it->provenance.push_back(r.provenance);
    arr.reports.push_back(std::move(r));
  }
  std::sort(arr.entries.begin(), arr.entries.end(),
            [](const ArrayEntry& x, const ArrayEntry& y) { return x.value < y.value; });
  return arr;
}

std::string short_rational(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return to_string(r);
}

std::string format_array(const DensityArray& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (i) s += ", ";
    s += short_rational(a.entries[i].value);
  }
  return s + "]";
}

nlohmann::json to_json(const DensityArray& a, bool with_timing) {
  nlohmann::json j;
  j["name"] = a.name;
  j["array"] = format_array(a);
  j["complete"] = a.complete;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : a.entries)
    entries.push_back({{"value", to_string(e.value)}, {"witnesses", e.witnesses}, {"provenance", e.provenance}});
  j["entries"] = entries;
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : a.reports) reports.push_back(to_json(r, with_timing));
  j["reports"] = reports;
  return j;
}

std::string reports_to_csv(const std::vector<DensityReport>& reports) {
  std::ostringstream out;
  out << "case,group,order,action,N,max_intersecting,upper_bound,rho,status\n";
  for (const auto& r : reports)
    out << r.case_id << ",\"" << r.group_name << "\"," << r.order << ",\"" << r.action << "\"," << r.n << ","
        << r.lower << "," << r.upper << "," << to_string(r.rho) << "," << r.status << "\n";
  return out.str();
}

std::string reports_to_markdown(const std::vector<DensityReport>& reports) {
  std::ostringstream out;
  out << "| case | group | order | action | N | max intersecting | bound | rho | status |\n"
      << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : reports)
    out << "| " << r.case_id << " | " << r.group_name << " | " << r.order << " | " << r.action << " | " << r.n
        << " | " << r.lower << " | " << r.upper << " | " << short_rational(r.rho) << " | " << r.status << " |\n";
  return out.str();
}

std::string arrays_to_csv(const std::vector<DensityArray>& arrays) {
  std::ostringstream out;
  out << "kneser_graph,array,complete\n";
  for (const auto& a : arrays)
    out << "\"" << a.name << "\",\"" << format_array(a) << "\"," << (a.complete ? "true" : "false") << "\n";
  return out.str();
}

std::string arrays_to_markdown(const std::vector<DensityArray>& arrays) {
  std::ostringstream out;
  out << "| Kneser Graph | Array |\n|---|---|\n";
  for (const auto& a : arrays) {
    std::string cell = format_array(a);
    bool annotated = false;
    for (const auto& e : a.entries)
      for (const auto& p : e.provenance)
        if (p != "computed") annotated = true;
    if (annotated) cell += " (includes annotated entries)";
    out << "| " << a.name << " | " << cell << " |\n";
  }
  return out.str();
}

}  // namespace kdensity
