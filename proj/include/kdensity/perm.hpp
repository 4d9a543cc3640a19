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

// Permutations and fully enumerated permutation groups.
//
// Points are 0-indexed internally; cycle notation in and out is 1-indexed.
// Composition is the left action: compose(g, h)(v) = g(h(v)).

#ifndef KDENSITY_PERM_HPP_
#define KDENSITY_PERM_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kdensity {

using Point = std::uint16_t;

class Perm {
 public:
  Perm() = default;
  // Throws std::invalid_argument unless `images` is a bijection of 0..n-1.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t n);
  // "(1,2,3)(4,5)" on n points; "()" is the identity.
  static Perm from_cycles(std::string_view text, std::size_t n);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point v) const { return images_[v]; }
  std::span<const Point> images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;
  std::size_t order() const;
  std::size_t fixed_point_count() const;
  // Non-trivial and trivial cycles, each starting at its least point, in
  // order of that point.
  std::vector<std::vector<Point>> cycles() const;
  std::string to_cycle_string() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<Point> images_;
};

Perm perm_compose(const Perm& g, const Perm& h);
inline Perm operator*(const Perm& g, const Perm& h) { return perm_compose(g, h); }
Perm power(const Perm& g, std::int64_t e);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

class ClosureOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A permutation group with every element materialized and sorted
// lexicographically by image array. Element indices refer to that order.
class Group {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  Group() = default;

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::span<const Perm> generators() const { return generators_; }
  std::span<const Perm> elements() const { return elements_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const Perm& g) const;
  bool contains(const Perm& g) const { return index_of(g).has_value(); }
  // Index of g * h^-1 style products without re-hashing the inverse.
  std::size_t inverse_index(std::size_t i) const { return inverse_[i]; }
  std::size_t product_index(std::size_t i, std::size_t j) const;
  std::size_t identity_index() const { return 0; }

  // Free-form metadata, e.g. family/q for built groups, known_density.
  const std::map<std::string, std::string>& tags() const { return tags_; }
  void set_tag(const std::string& key, std::string value) { tags_[key] = std::move(value); }
  std::optional<std::string> tag(const std::string& key) const;

  friend Group group_closure(std::vector<Perm> generators, std::string name,
                             std::size_t cap);

 private:
  std::size_t degree_ = 0;
  std::string name_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::vector<std::size_t> inverse_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
  std::map<std::string, std::string> tags_;
};

// Breadth-first closure; throws ClosureOverflow past `cap` elements.
Group group_closure(std::vector<Perm> generators, std::string name = "",
                    std::size_t cap = Group::kDefaultCap);

// Closure of `generators`, which must all lie in `parent`.
Group subgroup(const Group& parent, std::vector<Perm> generators, std::string name);

struct ClassPartition {
  std::vector<std::vector<std::size_t>> classes;  // sorted element indices
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> representatives;       // least element index
  std::vector<std::size_t> inverse_class_map;
  std::vector<std::size_t> class_of;              // per element index

  std::size_t size() const { return classes.size(); }
};

// Orbits under conjugation by the generators; class 0 is the identity and the
// rest are ordered by least element.
ClassPartition conjugacy_classes(const Group& g);

// Coarsening of the class partition: classes of x and x^j with
// gcd(j, ord(x)) = 1 merged. Blocks are lists of class indices, ordered by
// least class index. Every block is closed under inverses.
std::vector<std::vector<std::size_t>> rational_classes(const Group& g,
                                                       const ClassPartition& p);

// Orbits of the group generated by `generators`, each acting on 0..n-1.
// Each orbit is sorted; orbits are ordered by least point.
std::vector<std::vector<std::size_t>> orbits(std::span<const Perm> generators,
                                             std::size_t n);

std::size_t gcd(std::size_t a, std::size_t b);

}  // namespace kdensity

#endif  // KDENSITY_PERM_HPP_
