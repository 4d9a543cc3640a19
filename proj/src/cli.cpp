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

#include "kdensity/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "kdensity/cases.hpp"
#include "kdensity/density.hpp"
#include "kdensity/group_io.hpp"
#include "kdensity/pgl.hpp"
#include "kdensity/scheme.hpp"

namespace kdensity::cli {

unsigned default_threads() {
  if (const char* env = std::getenv("KDENSITY_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::shared_ptr<const Group> load_group(const CliConfig& c) {
  if (!c.group.empty() && !c.group_file.empty()) throw UsageError("--group and --group-file are mutually exclusive");
  if (!c.group_file.empty()) {
    if (c.q) throw UsageError("--q applies to --group only");
    return std::make_shared<const Group>(materialize(read_group_file(c.group_file)));
  }
  if (c.group.empty()) throw UsageError("one of --group or --group-file is required");
  if (!c.q) throw UsageError("--group needs --q");
  return std::make_shared<const Group>(build_builtin(c.group, *c.q));
}

DensityOptions density_options(const CliConfig& c) {
  DensityOptions o;
  o.time_limit = c.time_limit;
  o.threads = c.threads;
  o.deterministic = c.deterministic;
  o.bounds = c.method == "all" || c.method == "bounds";
  o.search = c.method == "all" || c.method == "search";
  return o;
}

void require_json(const CliConfig& c) {
  if (c.format != "json") throw UsageError("--format " + c.format + " is not available for " + c.subcommand);
}

nlohmann::json group_summary(const Group& g) {
  return {{"name", g.name()}, {"order", g.order()}, {"degree", g.degree()}, {"tags", g.tags()}};
}

int cmd_build(const CliConfig& c, std::ostream& out) {
  require_json(c);
  std::shared_ptr<const Group> g = load_group(c);
  if (c.subgroup) {
    if (c.group.empty() || !c.q) throw UsageError("--subgroup needs --group and --q");
    const auto kind = pgl::parse_subgroup_kind(*c.subgroup);
    Group h = pgl::build_named_subgroup(kind, *c.q);
    for (const auto& x : h.generators())
      if (!g->contains(x)) throw UsageError(*c.subgroup + " is not a subgroup of " + g->name());
    g = std::make_shared<const Group>(std::move(h));
  }
  nlohmann::json j = to_json(group_file_of(*g));
  j["order"] = g->order();
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_orbits(const CliConfig& c, std::ostream& out) {
  require_json(c);
  const auto g = load_group(c);
  const Action a = induce_ksets(g, c.k);
  const auto orbs = action_orbits(a);
  std::optional<pgl::ProjLine> line;
  if (c.k == 3 && g->tag("q")) {
    const int q = std::stoi(*g->tag("q"));
    if (q % 2 == 1 && q % 4 == 1) line = pgl::line_for(q);
  }
  nlohmann::json list = nlohmann::json::array();
  for (std::size_t i = 0; i < orbs.size(); ++i) {
    const KSet& rep = a.domain()[orbs[i].front()];
    nlohmann::json o = {{"index", i}, {"size", orbs[i].size()}, {"representative", std::vector<int>(rep.begin(), rep.end())}};
    if (line) o["sign"] = pgl::to_string(kset_sign(*line, rep));
    list.push_back(o);
  }
  out << nlohmann::json{{"group", group_summary(*g)}, {"action", a.descriptor()}, {"domain_size", a.domain_size()},
                        {"transitive", a.transitive()}, {"orbits", list}}
                .dump(2)
      << '\n';
  return kExitOk;
}

void emit_reports(const CliConfig& c, const std::vector<DensityReport>& reps, std::ostream& out) {
  if (c.format == "csv") {
    out << reports_to_csv(reps);
  } else if (c.format == "markdown") {
    out << reports_to_markdown(reps);
  } else {
    out << to_json(reps.front(), !c.deterministic).dump(2) << '\n';
  }
}

int cmd_density(const CliConfig& c, std::ostream& out) {
  const auto g = load_group(c);
  const Action a = select_action(g, c.k, c.orbit);
  DensityReport r = compute_density(a, density_options(c));
  emit_reports(c, {r}, out);
  return kExitOk;
}

int cmd_bounds(const CliConfig& c, std::ostream& out) {
  const auto g = load_group(c);
  const Action a = select_action(g, c.k, c.orbit);
  CliConfig cc = c;
  cc.method = "bounds";
  DensityReport r = compute_density(a, density_options(cc));
  if (c.format != "json") {
    emit_reports(c, {r}, out);
    return kExitOk;
  }
  nlohmann::json j = to_json(r, !c.deterministic);
  const SchemeData s = build_scheme(*g);
  const DerangementData der = derangement_set(a, &s.classes);
  ClassSelection edges;
  for (std::size_t cls = 1; cls < s.classes.size(); ++cls)
    if (der.class_is_derangement[cls]) edges.classes.push_back(cls);
  j["spectrum"] = to_json(union_spectrum(s.table, edges));
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_clique(const CliConfig& c, std::ostream& out) {
  require_json(c);
  const auto g = load_group(c);
  const Action a = select_action(g, c.k, c.orbit);
  const DerangementData der = derangement_set(a, nullptr, c.deterministic ? 1 : c.threads);
  CliqueOptions o;
  o.time_limit = c.time_limit;
  o.threads = c.deterministic ? 1 : c.threads;
  o.deterministic = c.deterministic;
  const CliqueResult res = max_intersecting_set(a, der, o);
  std::vector<Perm> cert;
  for (std::size_t i : res.certificate) cert.push_back(g->element(i));
  nlohmann::json j = {{"group", group_summary(*g)}, {"action", a.descriptor()}, {"N", a.domain_size()},
                      {"neighbourhood", g->order() - der.count - 1}};
  j["clique"] = to_json(res, *g, !c.deterministic);
  j["certificate_verified"] = is_intersecting_set(cert, a);
  j["rho"] = to_string(density_of(res.size, a.domain_size(), g->order()));
  j["status"] = res.optimal ? "exact" : "lower-bound";
  out << j.dump(2) << '\n';
  return j["certificate_verified"].get<bool>() ? kExitOk : kExitFailed;
}

int cmd_verify(const CliConfig& c, std::ostream& out) {
  std::vector<std::string> ids;
  for (const auto& id : c.cases) {
    if (id == "all") {
      const auto all = case_ids();
      ids.insert(ids.end(), all.begin(), all.end());
    } else if (!has_case(id)) {
      throw UsageError("unknown case '" + id + "'");
    } else {
      ids.push_back(id);
    }
  }
  if (ids.empty()) throw UsageError("verify needs --case");
  DensityOptions o = density_options(c);
  const auto results = run_cases(ids, o, c.deterministic ? 1 : c.threads);
  bool ok = true;
  for (const auto& r : results) ok &= r.passed();
  if (c.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : results) list.push_back(to_json(r, !c.deterministic));
    out << nlohmann::json{{"passed", ok}, {"cases", list}}.dump(2) << '\n';
  } else if (c.format == "csv") {
    out << "case,title,passed,checks,failed\n";
    for (const auto& r : results) {
      std::string failed;
      std::size_t nfail = 0;
      for (const auto& k : r.checks)
        if (!k.passed) failed += (nfail++ ? "; " : "") + k.name;
      out << r.id << ",\"" << r.title << "\"," << (r.passed() ? "pass" : "fail") << ',' << r.checks.size() << ",\""
          << failed << "\"\n";
    }
  } else {
    out << "| case | title | result | checks |\n|---|---|---|---|\n";
    std::vector<DensityArray> arrays;
    for (const auto& r : results) {
      out << "| " << r.id << " | " << r.title << " | " << (r.passed() ? "pass" : "FAIL") << " | " << r.checks.size()
          << " |\n";
      arrays.insert(arrays.end(), r.arrays.begin(), r.arrays.end());
    }
    const std::string orbit = orbit_table_markdown(results);
    if (orbit.find("\n|", orbit.find("|---")) != std::string::npos) out << '\n' << orbit;
    if (!arrays.empty()) out << '\n' << arrays_to_markdown(arrays);
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_array(const CliConfig& c, std::ostream& out) {
  if (c.catalog.empty()) throw UsageError("array needs --catalog");
  std::filesystem::path p = c.catalog;
  if (!std::filesystem::exists(p)) {
    const auto shipped = data_dir() / "catalogs" / (c.catalog + ".json");
    if (!std::filesystem::exists(shipped)) throw UsageError("catalog '" + c.catalog + "' not found");
    p = shipped;
  }
  const DensityArray arr = density_array(load_catalog(p), density_options(c));
  if (c.format == "csv") out << arrays_to_csv({arr});
  else if (c.format == "markdown") out << arrays_to_markdown({arr});
  else out << to_json(arr, !c.deterministic).dump(2) << '\n';
  return kExitOk;
}

void add_group_flags(CLI::App* sub, CliConfig& c, bool with_k) {
  sub->add_option("--group", c.group, "Built-in group")->check(CLI::IsMember({"pgl2", "psl2", "psl-sigma"}));
  sub->add_option("--q", c.q, "Field order");
  sub->add_option("--group-file", c.group_file, "Group file (JSON generators)");
  if (with_k) sub->add_option("--k", c.k, "Size of the subsets")->check(CLI::PositiveNumber);
}

void add_orbit_flag(CLI::App* sub, CliConfig& c) {
  sub->add_option("--orbit", c.orbit, "Restrict to an orbit: square, nonsquare or an index");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig c;
  c.threads = default_threads();
  CLI::App app{"Intersection densities of permutation groups acting on k-sets", "kdensity"};
  app.require_subcommand(1);
  app.add_option("--time-limit", c.time_limit, "Search time limit in seconds")->check(CLI::PositiveNumber);
  app.add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "markdown"}));
  app.add_flag("--deterministic", c.deterministic, "Single-threaded canonical search, no timings");
  app.set_help_all_flag("--help-all");

  auto* build = app.add_subcommand("build", "Build a group and print its generators");
  add_group_flags(build, c, false);
  build->add_option("--subgroup", c.subgroup, "Named subgroup: unipotent, unipotent_c3, unipotent_pm, a4, a5");

  auto* orbits = app.add_subcommand("orbits", "Orbits on k-sets");
  add_group_flags(orbits, c, true);

  auto* density = app.add_subcommand("density", "Intersection density");
  add_group_flags(density, c, true);
  add_orbit_flag(density, c);
  density->add_option("--method", c.method, "Pipeline stages")
      ->check(CLI::IsMember({"all", "bounds", "search", "construct"}));

  auto* bounds = app.add_subcommand("bounds", "Spectral and LP bounds");
  add_group_flags(bounds, c, true);
  add_orbit_flag(bounds, c);

  auto* clique = app.add_subcommand("clique", "Exact maximum intersecting set");
  add_group_flags(clique, c, true);
  add_orbit_flag(clique, c);

  auto* verify = app.add_subcommand("verify", "Run registered verification cases");
  verify->add_option("--case", c.cases, "Case id, or all")->required();

  auto* array = app.add_subcommand("array", "Density array of a group catalog");
  array->add_option("--catalog", c.catalog, "Catalog manifest path or shipped name (k8_3)")->required();

  // Global flags are accepted after the subcommand too.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  if (c.deterministic) c.threads = 1;

  try {
    if (c.subcommand == "build") return cmd_build(c, out);
    if (c.subcommand == "orbits") return cmd_orbits(c, out);
    if (c.subcommand == "density") return cmd_density(c, out);
    if (c.subcommand == "bounds") return cmd_bounds(c, out);
    if (c.subcommand == "clique") return cmd_clique(c, out);
    if (c.subcommand == "verify") return cmd_verify(c, out);
    if (c.subcommand == "array") return cmd_array(c, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace kdensity::cli
