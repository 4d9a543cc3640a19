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

#include "kdensity/action.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace kdensity {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t kset_rank(std::span<const Point> set, std::size_t n) {
  // Number of k-subsets lexicographically smaller than `set`.
  const std::size_t k = set.size();
  std::size_t rank = 0;
  std::size_t prev = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = (i == 0 ? 0 : prev + 1); v < set[i]; ++v)
      rank += binomial(n - v - 1, k - i - 1);
    prev = set[i];
  }
  return rank;
}

std::vector<KSet> all_ksets(std::size_t n, std::size_t k) {
  std::vector<KSet> out;
  KSet cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = static_cast<Point>(i);
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = static_cast<Point>(cur[j - 1] + 1);
  }
  return out;
}

namespace {

KSet apply(const Perm& g, const KSet& s) {
  KSet img(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) img[i] = g(s[i]);
  std::sort(img.begin(), img.end());
  return img;
}

}  // namespace

Perm induced_perm(const Perm& g, std::size_t k) {
  const std::size_t n = g.degree();
  const auto sets = all_ksets(n, k);
  if (sets.size() > 0xFFFF) throw std::invalid_argument("induced_perm: domain too large");
  std::vector<Point> img(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) img[i] = static_cast<Point>(kset_rank(apply(g, sets[i]), n));
  return Perm(std::move(img));
}

std::optional<std::size_t> Action::index_of(std::span<const Point> sorted_set) const {
  if (sorted_set.size() != k_) return std::nullopt;
  const std::size_t r = kset_rank(sorted_set, group_->degree());
  if (kind_ == DomainKind::orbit) {
    const std::int32_t i = rank_to_index_[r];
    if (i < 0) return std::nullopt;
    return static_cast<std::size_t>(i);
  }
  return r;
}

std::size_t Action::image(const Perm& g, std::size_t i) const {
  const KSet img = apply(g, domain_[i]);
  const auto idx = index_of(img);
  if (!idx) throw std::invalid_argument("Action::image: element does not preserve the domain");
  return *idx;
}

bool Action::fixes_some(const Perm& g) const {
  // A fixed k-set is a union of whole cycles of g with total length k.
  std::vector<std::vector<Point>> cycles;
  for (auto& c : g.cycles())
    if (c.size() <= k_) cycles.push_back(std::move(c));
  KSet chosen;
  chosen.reserve(k_);
  auto search = [&](auto&& self, std::size_t from, std::size_t remaining) -> bool {
    if (remaining == 0) {
      if (kind_ != DomainKind::orbit) return true;
      KSet s = chosen;
      std::sort(s.begin(), s.end());
      return index_of(s).has_value();
    }
    for (std::size_t c = from; c < cycles.size(); ++c) {
      if (cycles[c].size() > remaining) continue;
      chosen.insert(chosen.end(), cycles[c].begin(), cycles[c].end());
      const bool found = self(self, c + 1, remaining - cycles[c].size());
      chosen.resize(chosen.size() - cycles[c].size());
      if (found) return true;
    }
    return false;
  };
  return search(search, 0, k_);
}

void Action::finish(std::string descriptor) {
  generator_images_.clear();
  for (const auto& s : group_->generators()) {
    std::vector<Point> img(domain_.size());
    for (std::size_t i = 0; i < domain_.size(); ++i) img[i] = static_cast<Point>(image(s, i));
    generator_images_.emplace_back(std::move(img));
  }
  transitive_ = orbits(generator_images_, domain_.size()).size() == 1;
  descriptor_ = std::move(descriptor);
}

Action induce_ksets(std::shared_ptr<const Group> g, std::size_t k) {
  const std::size_t n = g->degree();
  if (k < 1 || k >= n) throw std::invalid_argument("induce_ksets: k must satisfy 1 <= k < n");
  if (binomial(n, k) > 0xFFFF) throw std::invalid_argument("induce_ksets: domain too large");
  Action a;
  a.group_ = std::move(g);
  a.kind_ = k == 1 ? DomainKind::points : DomainKind::ksets;
  a.k_ = k;
  a.domain_ = all_ksets(n, k);
  a.finish(k == 1 ? "points" : std::to_string(k) + "-sets");
  return a;
}

Action induce_ksets(const Group& g, std::size_t k) {
  return induce_ksets(std::make_shared<const Group>(g), k);
}

std::vector<std::vector<std::size_t>> action_orbits(const Action& a) {
  return orbits(a.generator_images(), a.domain_size());
}

Action restrict_to_orbit(const Action& a, std::size_t which) {
  const auto orbs = action_orbits(a);
  if (which >= orbs.size()) throw std::invalid_argument("restrict_to_orbit: no such orbit");
  Action r;
  r.group_ = a.group_;
  r.kind_ = DomainKind::orbit;
  r.k_ = a.k_;
  r.rank_to_index_.assign(binomial(a.group_->degree(), a.k_), -1);
  for (std::size_t i : orbs[which]) {
    const KSet& s = a.domain_[i];
    r.rank_to_index_[kset_rank(s, a.group_->degree())] = static_cast<std::int32_t>(r.domain_.size());
    r.domain_.push_back(s);
  }
  r.finish(std::to_string(a.k_) + "-sets orbit " + std::to_string(which) + " of " +
           std::to_string(orbs.size()));
  return r;
}

Group point_stabilizer(const Action& a, std::size_t point) {
  if (point >= a.domain_size()) throw std::invalid_argument("point_stabilizer: point outside domain");
  std::vector<Perm> members;
  for (const auto& g : a.group().elements())
    if (a.fixes(g, point)) members.push_back(g);
  return group_closure(std::move(members), "Stab(" + std::to_string(point) + ")", a.group().order());
}

DerangementData derangement_set(const Action& a, const ClassPartition* classes, unsigned threads) {
  const Group& g = a.group();
  DerangementData d;
  d.is_derangement.assign(g.order(), 0);
  threads = std::max(1u, std::min<unsigned>(threads, 64));
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (g.order() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t lo = t * chunk, hi = std::min(g.order(), lo + chunk);
      pool.emplace_back([&, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i) d.is_derangement[i] = !a.fixes_some(g.element(i));
      });
    }
  }
  for (char f : d.is_derangement) d.count += f;
  if (classes) {
    for (const auto& cls : classes->classes) {
      const char f = d.is_derangement[cls.front()];
      for (std::size_t i : cls)
        if (d.is_derangement[i] != f) d.class_constant = false;
      d.class_is_derangement.push_back(f);
    }
    if (!d.class_constant)
      throw std::logic_error("derangement flags are not constant on conjugacy classes");
  }
  return d;
}

bool is_intersecting_subgroup(const Group& h, const Action& a) {
  for (const auto& x : h.elements())
    if (!a.group().contains(x)) throw std::invalid_argument("is_intersecting_subgroup: H is not a subgroup of G");
  for (const auto& x : h.elements())
    if (!a.fixes_some(x)) return false;
  return true;
}

bool is_intersecting_set(std::span<const Perm> s, const Action& a) {
  for (const auto& x : s)
    if (!a.group().contains(x)) throw std::invalid_argument("is_intersecting_set: element outside G");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Perm inv = s[i].inverse();
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!a.fixes_some(s[j] * inv)) return false;
  }
  return true;
}

pgl::TripleSign kset_sign(const pgl::ProjLine& line, const KSet& s) {
  if (s.size() != 3) throw std::invalid_argument("kset_sign: need a 3-set");
  return pgl::triple_sign(line, s[0], s[1], s[2]);
}

Action select_orbit_by_sign(const Action& a, pgl::TripleSign sign) {
  const auto q = a.group().tag("q");
  if (!q || a.k() != 3) throw std::invalid_argument("orbit selection by sign needs a PSL-family group on 3-sets");
  const pgl::ProjLine line = pgl::line_for(std::stoi(*q));
  if (line.field().p == 2 || (line.field().q % 4) != 1)
    throw std::invalid_argument("orbit selection by sign needs q = 1 mod 4");
  const auto orbs = action_orbits(a);
  std::optional<std::size_t> chosen;
  for (std::size_t o = 0; o < orbs.size(); ++o) {
    const pgl::TripleSign s0 = kset_sign(line, a.domain()[orbs[o].front()]);
    for (std::size_t i : orbs[o])
      if (kset_sign(line, a.domain()[i]) != s0)
        throw std::logic_error("triple sign is not constant on an orbit");
    if (s0 == sign) {
      if (chosen) throw std::invalid_argument("sign does not single out one orbit");
      chosen = o;
    }
  }
  if (!chosen) throw std::invalid_argument("no orbit with that sign");
  Action r = restrict_to_orbit(a, *chosen);
  r.set_descriptor(r.descriptor() + " (" + pgl::to_string(sign) + ")");
  return r;
}

std::pair<Action, Action> split_3set_orbits(int q) {
  if (q % 4 != 1) throw std::invalid_argument("split_3set_orbits: q must be 1 mod 4");
  auto g = std::make_shared<const Group>(pgl::build_psl2(q));
  const Action full = induce_ksets(g, 3);
  if (action_orbits(full).size() != 2)
    throw std::logic_error("PSL(2,q) does not have exactly two 3-set orbits");
  return {select_orbit_by_sign(full, pgl::TripleSign::square),
          select_orbit_by_sign(full, pgl::TripleSign::nonsquare)};
}

}  // namespace kdensity
