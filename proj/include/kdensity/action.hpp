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

// Actions of a permutation group on k-subsets of its points, or on a single
// orbit of k-subsets, plus derangement detection and intersecting-set tests.

#ifndef KDENSITY_ACTION_HPP_
#define KDENSITY_ACTION_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kdensity/perm.hpp"
#include "kdensity/pgl.hpp"

namespace kdensity {

using KSet = std::vector<Point>;

enum class DomainKind { points, ksets, orbit };

// Lexicographic rank of a sorted k-subset of {0..n-1}.
std::size_t kset_rank(std::span<const Point> set, std::size_t n);
std::size_t binomial(std::size_t n, std::size_t k);
// All k-subsets of {0..n-1} in lexicographic order.
std::vector<KSet> all_ksets(std::size_t n, std::size_t k);
// Action of a permutation on the k-subsets, as a permutation of their ranks.
Perm induced_perm(const Perm& g, std::size_t k);

class Action {
 public:
  const Group& group() const { return *group_; }
  std::shared_ptr<const Group> group_ptr() const { return group_; }
  DomainKind kind() const { return kind_; }
  std::size_t k() const { return k_; }
  std::size_t domain_size() const { return domain_.size(); }
  const std::vector<KSet>& domain() const { return domain_; }
  std::span<const Perm> generator_images() const { return generator_images_; }
  bool transitive() const { return transitive_; }
  // "3-sets", "3-sets orbit 1 of 2", ...
  const std::string& descriptor() const { return descriptor_; }
  void set_descriptor(std::string d) { descriptor_ = std::move(d); }

  std::optional<std::size_t> index_of(std::span<const Point> sorted_set) const;
  // Image of domain element i under g; g need not be materialized in group().
  std::size_t image(const Perm& g, std::size_t i) const;
  bool fixes(const Perm& g, std::size_t i) const { return image(g, i) == i; }
  // True iff g fixes some domain element (i.e. g is not a derangement).
  bool fixes_some(const Perm& g) const;

  friend Action induce_ksets(std::shared_ptr<const Group> g, std::size_t k);
  friend Action restrict_to_orbit(const Action& a, std::size_t which);

 private:
  void finish(std::string descriptor);

  std::shared_ptr<const Group> group_;
  DomainKind kind_ = DomainKind::points;
  std::size_t k_ = 1;
  std::vector<KSet> domain_;
  // For orbit domains: lex rank of the k-set -> domain index, or -1.
  std::vector<std::int32_t> rank_to_index_;
  std::vector<Perm> generator_images_;
  bool transitive_ = false;
  std::string descriptor_;
};

// Domain = all C(n,k) k-subsets in lexicographic order; k = 1 gives the
// natural action. Requires 1 <= k < n.
Action induce_ksets(std::shared_ptr<const Group> g, std::size_t k);
Action induce_ksets(const Group& g, std::size_t k);

// Orbits of the action, each as sorted domain indices, ordered by least index.
std::vector<std::vector<std::size_t>> action_orbits(const Action& a);

// The `which`-th orbit (in action_orbits order) as a transitive action.
Action restrict_to_orbit(const Action& a, std::size_t which);

// Stabilizer of a domain element.
Group point_stabilizer(const Action& a, std::size_t point);

struct DerangementData {
  std::vector<char> is_derangement;  // per element index of the group
  std::size_t count = 0;
  // Per conjugacy class, or empty when no partition was supplied.
  std::vector<char> class_is_derangement;
  bool class_constant = true;
};

// Flags every element fixing no domain element. With a class partition the
// flags are checked to be constant on classes (std::logic_error otherwise).
// Work is split over `threads` workers; the result does not depend on it.
DerangementData derangement_set(const Action& a, const ClassPartition* classes = nullptr,
                                unsigned threads = 1);

// H must be a subgroup of a.group() (checked). True iff no element of H is a
// derangement.
bool is_intersecting_subgroup(const Group& h, const Action& a);

// S must lie in a.group() (checked). True iff every pair agrees on some
// domain element.
bool is_intersecting_set(std::span<const Perm> s, const Action& a);

// PSL(2,q), q = 1 mod 4, restricted to its two 3-set orbits, ordered
// (square orbit, nonsquare orbit) by triple sign.
std::pair<Action, Action> split_3set_orbits(int q);

// For an action of a PGL/PSL-family group (tag "q") on 3-sets: the orbit whose
// triples have the given sign. Throws if the sign does not pick out a single
// orbit.
Action select_orbit_by_sign(const Action& a, pgl::TripleSign sign);

// Triple sign of a 3-set of projective points of the line for q.
pgl::TripleSign kset_sign(const pgl::ProjLine& line, const KSet& s);

}  // namespace kdensity

#endif  // KDENSITY_ACTION_HPP_
