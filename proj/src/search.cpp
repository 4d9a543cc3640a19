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

#include "kdensity/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace kdensity {

void GraphView::init(std::size_t n) {
  if (n > kMaxGraphVertices)
    throw std::length_error("graph has " + std::to_string(n) + " vertices, above the cap of " +
                            std::to_string(kMaxGraphVertices));
  words_ = (n + 63) / 64;
  adj_.assign(n * words_, 0);
}

void GraphView::connect(std::size_t u, std::size_t v) {
  adj_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  adj_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t GraphView::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(row(u)[w]));
  return d;
}

GraphView GraphView::cayley(const Group& g, std::vector<std::size_t> vertices,
                            const std::vector<char>& connection) {
  GraphView gv;
  gv.init(vertices.size());
  gv.labels_ = std::move(vertices);
  const std::size_t n = gv.labels_.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (connection[g.product_index(gv.labels_[u], g.inverse_index(gv.labels_[v]))]) gv.connect(u, v);
  return gv;
}

GraphView GraphView::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  GraphView gv;
  gv.init(n);
  gv.labels_.resize(n);
  std::iota(gv.labels_.begin(), gv.labels_.end(), std::size_t{0});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n || u == v) throw std::invalid_argument("from_edges: bad edge");
    gv.connect(u, v);
  }
  return gv;
}

namespace {

using Clock = std::chrono::steady_clock;
using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  for (auto w : b)
    if (w) return true;
  return false;
}

class Solver {
 public:
  Solver(const GraphView& gv, const CliqueOptions& opts) : gv_(gv), opts_(opts) {
    n_ = gv.size();
    words_ = (n_ + 63) / 64;
    order_vertices();
    adj_.assign(n_ * words_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && gv.adjacent(order_[i], order_[j])) adj_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(std::max(0.0, opts.time_limit)));
    target_ = opts.upper_bound.value_or(n_ + 1);
  }

  CliqueResult run() {
    const auto start = Clock::now();
    CliqueResult res;
    seed_initial();
    if (best_.load() >= target_) {
      by_bound_ = true;
    } else if (n_ > 0) {
      solve_root();
    }
    res.size = best_.load();
    for (std::size_t v : best_clique_) res.certificate.push_back(gv_.labels()[order_[v]]);
    std::sort(res.certificate.begin(), res.certificate.end());
    res.optimal_by_bound = by_bound_.load();
    res.optimal = res.optimal_by_bound || !timed_out_.load();
    res.nodes = nodes_.load();
    res.elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    return res;
  }

 private:
  // Degeneracy order, highest core first; ties by (possibly shuffled) id.
  void order_vertices() {
    std::vector<std::size_t> key(n_);
    std::iota(key.begin(), key.end(), std::size_t{0});
    if (opts_.seed != 0) {
      std::mt19937_64 rng(opts_.seed);
      std::shuffle(key.begin(), key.end(), rng);
    }
    std::vector<std::size_t> deg(n_);
    for (std::size_t v = 0; v < n_; ++v) deg[v] = gv_.degree(v);
    std::vector<char> gone(n_, 0);
    std::vector<std::size_t> removal;
    removal.reserve(n_);
    for (std::size_t step = 0; step < n_; ++step) {
      std::size_t pick = n_;
      for (std::size_t v = 0; v < n_; ++v) {
        if (gone[v]) continue;
        if (pick == n_ || deg[v] < deg[pick] || (deg[v] == deg[pick] && key[v] < key[pick])) pick = v;
      }
      gone[pick] = 1;
      removal.push_back(pick);
      for (std::size_t u = 0; u < n_; ++u)
        if (!gone[u] && gv_.adjacent(pick, u)) --deg[u];
    }
    order_.assign(removal.rbegin(), removal.rend());
    position_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) position_[order_[i]] = i;
  }

  void seed_initial() {
    const auto& init = opts_.initial_clique;
    for (std::size_t i = 0; i < init.size(); ++i) {
      if (init[i] >= n_) throw std::invalid_argument("initial clique: vertex out of range");
      for (std::size_t j = i + 1; j < init.size(); ++j)
        if (!gv_.adjacent(init[i], init[j])) throw std::invalid_argument("initial clique is not a clique");
    }
    best_clique_.clear();
    for (std::size_t v : init) best_clique_.push_back(position_[v]);
    best_ = init.size();
  }

  const std::uint64_t* nb(std::size_t v) const { return adj_.data() + v * words_; }

  // Greedy sequential colouring of p: vertices in colour order and colours.
  void colour(const Bits& p, std::vector<std::size_t>& verts, std::vector<std::size_t>& cols) const {
    verts.clear();
    cols.clear();
    Bits q = p, qk(words_);
    std::size_t k = 0;
    while (any(q)) {
      ++k;
      qk = q;
      for (std::size_t w = 0; w < words_; ++w) {
        while (qk[w]) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(qk[w]));
          const std::uint64_t bit = std::uint64_t{1} << (v % 64);
          q[w] &= ~bit;
          qk[w] &= ~bit;
          const std::uint64_t* a = nb(v);
          for (std::size_t x = w; x < words_; ++x) qk[x] &= ~a[x];
          verts.push_back(v);
          cols.push_back(k);
        }
      }
    }
  }

  void record(const std::vector<std::size_t>& c) {
    std::lock_guard lock(mu_);
    if (c.size() <= best_.load()) return;
    best_clique_ = c;
    best_ = c.size();
    if (c.size() >= target_) {
      by_bound_ = true;
      stop_ = true;
    }
  }

  bool check_time(std::uint64_t& local) {
    if (++local % 1024 == 0 && Clock::now() > deadline_) {
      timed_out_ = true;
      stop_ = true;
    }
    return stop_.load(std::memory_order_relaxed);
  }

  void expand(std::vector<std::size_t>& c, Bits& p, std::uint64_t& local) {
    nodes_.fetch_add(1, std::memory_order_relaxed);
    if (check_time(local)) return;
    std::vector<std::size_t> verts, cols;
    colour(p, verts, cols);
    Bits np(words_);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (c.size() + cols[i] <= best_.load(std::memory_order_relaxed)) return;
      const std::size_t v = verts[i];
      c.push_back(v);
      const std::uint64_t* a = nb(v);
      bool nonempty = false;
      for (std::size_t w = 0; w < words_; ++w) {
        np[w] = p[w] & a[w];
        nonempty = nonempty || np[w];
      }
      if (!nonempty) {
        record(c);
      } else {
        Bits sub = np;
        expand(c, sub, local);
      }
      c.pop_back();
      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
      if (stop_.load(std::memory_order_relaxed)) return;
    }
  }

  void solve_root() {
    Bits all(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<std::size_t> verts, cols;
    colour(all, verts, cols);
    // Branches in processing order: highest colour first.
    std::vector<std::size_t> branch(verts.rbegin(), verts.rend());
    std::vector<std::size_t> bound(cols.rbegin(), cols.rend());
    std::vector<std::size_t> rank(n_);
    for (std::size_t t = 0; t < n_; ++t) rank[branch[t]] = t;

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      std::uint64_t local = 0;
      std::vector<std::size_t> c;
      Bits p(words_);
      for (;;) {
        const std::size_t t = next.fetch_add(1);
        if (t >= n_ || stop_.load()) return;
        if (bound[t] <= best_.load()) {
          // Bounds only decrease along the branch list.
          next = n_;
          return;
        }
        const std::size_t v = branch[t];
        std::fill(p.begin(), p.end(), 0);
        bool nonempty = false;
        for (std::size_t u = 0; u < n_; ++u)
          if (rank[u] > t && ((nb(v)[u / 64] >> (u % 64)) & 1u)) {
            p[u / 64] |= std::uint64_t{1} << (u % 64);
            nonempty = true;
          }
        c.assign(1, v);
        if (!nonempty) {
          record(c);
        } else {
          expand(c, p, local);
        }
      }
    };
    const unsigned threads = opts_.deterministic ? 1u : std::max(1u, opts_.threads);
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
  }

  const GraphView& gv_;
  const CliqueOptions& opts_;
  std::size_t n_ = 0, words_ = 0, target_ = 0;
  std::vector<std::size_t> order_, position_;
  std::vector<std::uint64_t> adj_;
  Clock::time_point deadline_;
  std::atomic<std::size_t> best_{0};
  std::vector<std::size_t> best_clique_;
  std::mutex mu_;
  std::atomic<bool> stop_{false}, timed_out_{false}, by_bound_{false};
  std::atomic<std::uint64_t> nodes_{0};
};

std::vector<char> connection_flags(const DerangementData& der) {
  std::vector<char> conn(der.is_derangement.size());
  for (std::size_t i = 0; i < conn.size(); ++i) conn[i] = !der.is_derangement[i];
  conn[0] = 0;
  return conn;
}

}  // namespace

CliqueResult max_clique(const GraphView& gv, const CliqueOptions& opts) {
  Solver s(gv, opts);
  return s.run();
}

std::vector<std::size_t> identity_neighbourhood(const DerangementData& der) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < der.is_derangement.size(); ++i)
    if (!der.is_derangement[i]) out.push_back(i);
  return out;
}

CliqueResult max_intersecting_set(const Action& a, const DerangementData& der, CliqueOptions opts,
                                  const std::vector<std::size_t>& initial) {
  if (!a.transitive()) throw std::invalid_argument("max_intersecting_set: the action is not transitive");
  const auto nbhd = identity_neighbourhood(der);
  const GraphView gv = GraphView::cayley(a.group(), nbhd, connection_flags(der));
  if (opts.upper_bound) opts.upper_bound = *opts.upper_bound > 0 ? *opts.upper_bound - 1 : 0;
  opts.initial_clique.clear();
  if (!initial.empty()) {
    if (std::find(initial.begin(), initial.end(), std::size_t{0}) == initial.end())
      throw std::invalid_argument("initial intersecting set must contain the identity");
    for (std::size_t e : initial) {
      if (e == 0) continue;
      const auto it = std::lower_bound(nbhd.begin(), nbhd.end(), e);
      if (it == nbhd.end() || *it != e) throw std::invalid_argument("initial set is not intersecting");
      opts.initial_clique.push_back(static_cast<std::size_t>(it - nbhd.begin()));
    }
  }
  CliqueResult r = max_clique(gv, opts);
  r.size += 1;
  r.certificate.insert(r.certificate.begin(), 0);
  return r;
}

CliqueResult max_intersecting_set_unreduced(const Action& a, const DerangementData& der,
                                            CliqueOptions opts) {
  std::vector<std::size_t> all(a.group().order());
  std::iota(all.begin(), all.end(), std::size_t{0});
  const GraphView gv = GraphView::cayley(a.group(), all, connection_flags(der));
  opts.initial_clique.clear();
  return max_clique(gv, opts);
}

std::vector<std::size_t> greedy_intersecting_set(const Action& a, const DerangementData& der) {
  const auto nbhd = identity_neighbourhood(der);
  const GraphView gv = GraphView::cayley(a.group(), nbhd, connection_flags(der));
  const std::size_t n = gv.size();
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> chosen{0};
  for (;;) {
    std::size_t pick = n, best_deg = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      std::size_t d = 0;
      for (std::size_t u = 0; u < n; ++u)
        if (alive[u] && gv.adjacent(u, v)) ++d;
      if (pick == n || d > best_deg) {
        pick = v;
        best_deg = d;
      }
    }
    if (pick == n) break;
    chosen.push_back(gv.labels()[pick]);
    alive[pick] = 0;
    for (std::size_t u = 0; u < n; ++u)
      if (!gv.adjacent(u, pick)) alive[u] = 0;
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

nlohmann::json to_json(const CliqueResult& r, const Group& g, bool with_timing) {
  nlohmann::json j;
  j["size"] = r.size;
  j["optimal"] = r.optimal;
  j["optimal_by_bound"] = r.optimal_by_bound;
  j["nodes"] = r.nodes;
  if (with_timing) j["elapsed_seconds"] = r.elapsed;
  nlohmann::json cert = nlohmann::json::array();
  for (std::size_t i : r.certificate) {
    const auto img = g.element(i).images();
    cert.push_back(std::vector<int>(img.begin(), img.end()));
  }
  j["certificate"] = cert;
  return j;
}

}  // namespace kdensity
