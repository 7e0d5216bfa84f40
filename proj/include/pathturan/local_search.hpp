// Copyright 2026 The pathturan Authors
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

// Hill climbing for dense F-free graphs. The current graph is always F-free,
// so a move that adds uv only needs to rule out copies of F through uv.
//
// Moves: add a random non-edge when that keeps the graph F-free; otherwise
// take the copy of F that the new edge would create and try to trade one of
// its other edges for uv (a plateau move). Occasionally a vertex is rewired
// to copy another vertex's neighbourhood, which moves between the twin-heavy
// shapes extremal graphs tend to have. After a stretch without
// improvement the graph is perturbed by deleting a few edges, and every so
// often the search restarts from the empty graph.

#pragma once

#include <cstdint>
#include <vector>

#include "pathturan/errors.hpp"
#include "pathturan/forest.hpp"
#include "pathturan/graph.hpp"
#include "pathturan/path_forest.hpp"
#include "pathturan/rng.hpp"
#include "pathturan/small_graph.hpp"

namespace pathturan {

struct LocalSearchBudget {
  std::int64_t iterations = 100000;
  std::uint64_t seed = 42;
  /// Iterations without a new best before perturbing.
  std::int64_t patience = 2000;
  /// Perturbations before a restart from scratch.
  int perturbations_per_restart = 8;
};

struct LocalSearchResult {
  std::int64_t best = 0;
  Graph witness;
  std::int64_t iterations = 0;
  std::int64_t restarts = 0;
};

namespace detail {

class LocalSearch {
 public:
  LocalSearch(int n, const PathForest& forest, const LocalSearchBudget& budget)
      : n_(n), orders_(forest.orders()), budget_(budget), rng_(budget.seed) {
    g_.n = n;
  }

  LocalSearchResult run() {
    LocalSearchResult out;
    out.witness = g_.to_graph();
    std::int64_t since_best = 0;
    int perturbations = 0;
    for (std::int64_t it = 0; it < budget_.iterations; ++it) {
      step();
      const int e = g_.edge_count();
      if (e > out.best) {
        out.best = e;
        out.witness = g_.to_graph();
        since_best = 0;
      } else if (++since_best >= budget_.patience) {
        since_best = 0;
        if (++perturbations >= budget_.perturbations_per_restart) {
          perturbations = 0;
          ++out.restarts;
          g_ = SmallGraph{};
          g_.n = n_;
        } else {
          perturb();
        }
      }
      out.iterations = it + 1;
    }
    return out;
  }

 private:
  void step() {
    if (n_ < 2) return;
    if (rng_.chance(1, 16)) {
      clone();
      return;
    }
    std::vector<std::pair<int, int>> missing;
    for (int v = 1; v < n_; ++v) {
      for (int u = 0; u < v; ++u) {
        if (!g_.adjacent(u, v)) missing.emplace_back(u, v);
      }
    }
    if (missing.empty()) return;
    const auto [u, v] = rng_.pick(missing);
    g_.add_edge(u, v);
    Sequences copy;
    {
      ForestHost host(g_);
      if (!host.anchored(u, v, g_.vertices(), orders_, &copy)) return;  // accepted
    }
    // try to swap one other edge of the created copy for uv
    std::vector<std::pair<int, int>> options;
    for (const auto& s : copy) {
      for (std::size_t i = 1; i < s.size(); ++i) {
        const int a = s[i - 1], b = s[i];
        if (!((a == u && b == v) || (a == v && b == u))) options.emplace_back(a, b);
      }
    }
    rng_.shuffle(options);
    const std::size_t tries = std::min<std::size_t>(options.size(), 4);
    for (std::size_t i = 0; i < tries; ++i) {
      const auto [a, b] = options[i];
      g_.remove_edge(a, b);
      ForestHost host(g_);
      if (!host.anchored(u, v, g_.vertices(), orders_, nullptr)) return;  // swapped
      g_.add_edge(a, b);
    }
    g_.remove_edge(u, v);
  }

  // Rewires x to copy y's neighbourhood (plus y itself half the time), adding
  // the edges one by one while F-freeness holds. Kept when the edge count
  // does not drop.
  void clone() {
    const int x = static_cast<int>(rng_.below(static_cast<std::uint64_t>(n_)));
    int y = static_cast<int>(rng_.below(static_cast<std::uint64_t>(n_ - 1)));
    if (y >= x) ++y;
    const SmallGraph before = g_;
    const int edges = g_.edge_count();
    for (Mask m = g_.adj[x]; m; m &= m - 1) g_.remove_edge(x, lowest(m));
    Mask targets = before.adj[y] & ~bit_of(x);
    if (rng_.chance(1, 2)) targets |= bit_of(y);
    std::vector<int> order;
    for (Mask m = targets; m; m &= m - 1) order.push_back(lowest(m));
    rng_.shuffle(order);
    for (int w : order) {
      g_.add_edge(x, w);
      ForestHost host(g_);
      if (host.anchored(x, w, g_.vertices(), orders_, nullptr)) g_.remove_edge(x, w);
    }
    if (g_.edge_count() < edges) g_ = before;
  }

  void perturb() {
    std::vector<std::pair<int, int>> present;
    for (int v = 1; v < n_; ++v) {
      for (int u = 0; u < v; ++u) {
        if (g_.adjacent(u, v)) present.emplace_back(u, v);
      }
    }
    rng_.shuffle(present);
    const std::size_t drop = std::min<std::size_t>(present.size(), 1 + static_cast<std::size_t>(rng_.below(4)));
    for (std::size_t i = 0; i < drop; ++i) g_.remove_edge(present[i].first, present[i].second);
  }

  int n_;
  std::vector<int> orders_;
  LocalSearchBudget budget_;
  Rng rng_;
  SmallGraph g_;
};

}  // namespace detail

/// Best F-free edge count found by seeded hill climbing, with the graph.
/// A lower bound only; never a claim of optimality. Cap: n <= 32 (the exact
/// forest engine's host cap).
inline LocalSearchResult local_search_max(int n, const PathForest& forest, const LocalSearchBudget& budget = {}) {
  require(n >= 1, "local_search_max needs n >= 1");
  require(budget.iterations >= 0 && budget.patience >= 1, "local_search_max: bad budget");
  require_capability(n <= static_cast<int>(kForestHostCap), "local_search_max: n exceeds the forest engine cap of 32");
  require_capability(forest.total_order() <= kForestTotalCap, "local_search_max: forest order exceeds 24");
  return detail::LocalSearch(n, forest, budget).run();
}

}  // namespace pathturan
