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

#include "oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <functional>
#include <set>

namespace oracle {

std::vector<double> cayley_spectrum(const Group& g, const std::vector<char>& connection) {
  const std::size_t n = g.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  std::vector<Perm> inv(n);
  for (std::size_t v = 0; v < n; ++v) inv[v] = g.element(v).inverse();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (connection[*g.index_of(g.element(u) * inv[v])])
        a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 1;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> expand(const std::vector<kdensity::SpectrumEntry>& spectrum) {
  std::vector<double> out;
  for (const auto& e : spectrum) out.insert(out.end(), e.multiplicity, e.value);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<KSet> subsets(std::size_t n, std::size_t k) {
  std::vector<KSet> out;
  std::vector<char> pick(n, 0);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(k), pick.end(), 1);
  do {
    KSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(static_cast<kdensity::Point>(i));
    out.push_back(s);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

bool fixes_a_set(const Perm& g, const std::vector<KSet>& domain) {
  for (const auto& s : domain) {
    std::set<kdensity::Point> a(s.begin(), s.end()), b;
    for (auto x : s) b.insert(g(x));
    if (a == b) return true;
  }
  return false;
}

bool intersecting(const std::vector<Perm>& s, const std::vector<KSet>& domain) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      bool agree = false;
      for (const auto& x : domain) {
        std::set<kdensity::Point> a, b;
        for (auto p : x) {
          a.insert(s[i](p));
          b.insert(s[j](p));
        }
        if (a == b) {
          agree = true;
          break;
        }
      }
      if (!agree) return false;
    }
  return true;
}

std::size_t max_clique(const std::vector<std::vector<char>>& adj) {
  const std::size_t n = adj.size();
  std::size_t best = 0;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    best = std::max(best, cur.size());
    for (std::size_t v = from; v < n; ++v) {
      if (!std::all_of(cur.begin(), cur.end(), [&](std::size_t u) { return adj[u][v]; })) continue;
      cur.push_back(v);
      grow(v + 1);
      cur.pop_back();
    }
  };
  grow(0);
  return best;
}

}  // namespace oracle
