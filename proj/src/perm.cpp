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

#include "kdensity/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace kdensity {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v])
      throw std::invalid_argument("Perm: image array is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  Perm p;
  p.images_ = std::move(img);
  return p;
}

Perm Perm::from_cycles(std::string_view text, std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(n, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("cycle notation: expected '('");
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw std::invalid_argument("cycle notation: expected a point");
      const unsigned long v = std::stoul(std::string(text.substr(start, pos - start)));
      if (v < 1 || v > n) throw std::invalid_argument("cycle notation: point out of range");
      if (used[v - 1]) throw std::invalid_argument("cycle notation: repeated point");
      used[v - 1] = true;
      cycle.push_back(static_cast<Point>(v - 1));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Perm::order() const {
  std::size_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, c.size());
  return result;
}

std::size_t Perm::fixed_point_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) n += images_[i] == i;
  return n;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Point> c;
    for (Point v = static_cast<Point>(s); !seen[v]; v = images_[v]) {
      seen[v] = true;
      c.push_back(v);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Perm::to_cycle_string() const {
  std::string s;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i] + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Perm perm_compose(const Perm& g, const Perm& h) {
  if (g.degree() != h.degree()) throw std::invalid_argument("perm_compose: degree mismatch");
  std::vector<Point> img(g.degree());
  for (std::size_t v = 0; v < img.size(); ++v) img[v] = g(h(static_cast<Point>(v)));
  return Perm(std::move(img));
}

Perm power(const Perm& g, std::int64_t e) {
  if (e < 0) return power(g.inverse(), -e);
  Perm result = Perm::identity(g.degree());
  Perm base = g;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the image array.
  std::uint64_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::optional<std::size_t> Group::index_of(const Perm& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Group::product_index(std::size_t i, std::size_t j) const {
  return index_.at(elements_[i] * elements_[j]);
}

std::optional<std::string> Group::tag(const std::string& key) const {
  auto it = tags_.find(key);
  if (it == tags_.end()) return std::nullopt;
  return it->second;
}

Group group_closure(std::vector<Perm> generators, std::string name, std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("group_closure: no generators");
  const std::size_t n = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != n) throw std::invalid_argument("group_closure: generator degree mismatch");

  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> queue;
  const Perm id = Perm::identity(n);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : generators) {
      Perm y = s * x;
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw ClosureOverflow("group_closure: more than " + std::to_string(cap) + " elements");
        queue.push_back(std::move(y));
      }
    }
  }

  Group g;
  g.degree_ = n;
  g.name_ = std::move(name);
  g.generators_ = std::move(generators);
  g.elements_.assign(seen.begin(), seen.end());
  std::sort(g.elements_.begin(), g.elements_.end());
  g.index_.reserve(g.elements_.size());
  for (std::size_t i = 0; i < g.elements_.size(); ++i) g.index_.emplace(g.elements_[i], i);
  g.inverse_.resize(g.elements_.size());
  for (std::size_t i = 0; i < g.elements_.size(); ++i)
    g.inverse_[i] = g.index_.at(g.elements_[i].inverse());
  return g;
}

Group subgroup(const Group& parent, std::vector<Perm> generators, std::string name) {
  for (const auto& s : generators)
    if (!parent.contains(s)) throw std::invalid_argument("subgroup: generator outside parent group");
  return group_closure(std::move(generators), std::move(name), parent.order());
}

ClassPartition conjugacy_classes(const Group& g) {
  const std::size_t order = g.order();
  std::vector<std::size_t> gen_idx, gen_inv_idx;
  for (const auto& s : g.generators()) {
    gen_idx.push_back(*g.index_of(s));
    gen_inv_idx.push_back(g.inverse_index(gen_idx.back()));
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(order, kNone);
  std::vector<std::vector<std::size_t>> classes;
  // Elements are scanned in index order, so classes come out ordered by
  // least element and the identity (index 0) is class 0.
  for (std::size_t start = 0; start < order; ++start) {
    if (class_of[start] != kNone) continue;
    const std::size_t c = classes.size();
    std::vector<std::size_t> members{start};
    class_of[start] = c;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const std::size_t x = members[head];
      for (std::size_t t = 0; t < gen_idx.size(); ++t) {
        const std::size_t y = g.product_index(g.product_index(gen_idx[t], x), gen_inv_idx[t]);
        if (class_of[y] == kNone) {
          class_of[y] = c;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }

  ClassPartition p;
  p.classes = std::move(classes);
  p.class_of = std::move(class_of);
  for (const auto& c : p.classes) {
    p.sizes.push_back(c.size());
    p.representatives.push_back(c.front());
  }
  for (std::size_t c = 0; c < p.classes.size(); ++c)
    p.inverse_class_map.push_back(p.class_of[g.inverse_index(p.representatives[c])]);
  return p;
}

std::size_t gcd(std::size_t a, std::size_t b) { return std::gcd(a, b); }

std::vector<std::vector<std::size_t>> rational_classes(const Group& g, const ClassPartition& p) {
  const std::size_t d = p.size();
  std::vector<std::size_t> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t c = 0; c < d; ++c) {
    const Perm& x = g.element(p.representatives[c]);
    const std::size_t ord = x.order();
    for (std::size_t j = 2; j < ord; ++j) {
      if (std::gcd(j, ord) != 1) continue;
      const std::size_t other = p.class_of[*g.index_of(power(x, static_cast<std::int64_t>(j)))];
      const std::size_t a = find(c), b = find(other);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t c = 0; c < d; ++c) blocks[find(c)].push_back(c);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : blocks) out.push_back(std::move(members));
  return out;
}

std::vector<std::vector<std::size_t>> orbits(std::span<const Perm> generators, std::size_t n) {
  for (const auto& s : generators)
    if (s.degree() != n) throw std::invalid_argument("orbits: generator degree mismatch");
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> orbit{start};
    seen[start] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& s : generators) {
        const std::size_t y = s(static_cast<Point>(orbit[head]));
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace kdensity
