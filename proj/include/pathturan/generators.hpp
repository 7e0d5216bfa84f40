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

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "pathturan/checked.hpp"
#include "pathturan/errors.hpp"
#include "pathturan/graph.hpp"
#include "pathturan/rng.hpp"

namespace pathturan {

/// Uniformly random labelled permutation of g.
inline Graph random_relabel(const Graph& g, Rng& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  return permute(g, perm);
}

/// Adds uniformly random non-edges until g has `target` edges.
inline void fill_random_edges(Graph& g, std::int64_t target, Rng& rng) {
  require(target <= choose2(static_cast<std::int64_t>(g.order())), "fill_random_edges: target above C(n,2)");
  std::vector<Edge> missing;
  for (Vertex v = 1; v < static_cast<Vertex>(g.order()); ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (!g.adjacent(u, v)) missing.emplace_back(u, v);
    }
  }
  rng.shuffle(missing);
  for (std::size_t i = 0; g.edge_count() < target && i < missing.size(); ++i) {
    g.add_edge(missing[i].first, missing[i].second);
  }
}

/// Uniform G(n, m).
inline Graph random_gnm(std::int64_t n, std::int64_t m, Rng& rng) {
  require(n >= 0 && m >= 0 && m <= choose2(n), "random_gnm needs 0 <= m <= C(n,2)");
  Graph g(static_cast<std::size_t>(n));
  fill_random_edges(g, m, rng);
  return g;
}

/// 2-connected graph on n vertices and m edges grown by ear decomposition:
/// a random cycle, then open ears that absorb the remaining vertices, then
/// random chords, then a random relabelling.
inline Graph random_two_connected(std::int64_t n, std::int64_t m, Rng& rng) {
  require(n >= 3, "random_two_connected needs n >= 3");
  require(m >= n && m <= choose2(n), "random_two_connected needs n <= m <= C(n,2)");
  const std::int64_t spare = m - n;  // each ear costs one edge beyond its vertices
  std::int64_t cycle = n;
  if (spare > 0) cycle = rng.between(3, n);
  Graph g(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < cycle; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % cycle));
  std::int64_t rest = n - cycle;
  if (rest > 0) {
    const std::int64_t ears = rng.between(1, std::min(rest, spare));
    // split `rest` into `ears` positive parts: choose ears-1 cut points
    std::vector<std::int64_t> cuts;
    std::vector<std::int64_t> pool(static_cast<std::size_t>(rest - 1));
    std::iota(pool.begin(), pool.end(), 1);
    rng.shuffle(pool);
    cuts.assign(pool.begin(), pool.begin() + (ears - 1));
    cuts.push_back(0);
    cuts.push_back(rest);
    std::sort(cuts.begin(), cuts.end());
    Vertex next = static_cast<Vertex>(cycle);
    for (std::size_t e = 0; e + 1 < cuts.size(); ++e) {
      const std::int64_t len = cuts[e + 1] - cuts[e];
      const Vertex placed = next;
      const Vertex a = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(placed)));
      Vertex b = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(placed - 1)));
      if (b >= a) ++b;
      Vertex prev = a;
      for (std::int64_t i = 0; i < len; ++i) {
        g.add_edge(prev, next);
        prev = next++;
      }
      g.add_edge(prev, b);
    }
  }
  fill_random_edges(g, m, rng);
  return random_relabel(g, rng);
}

inline Graph random_two_connected(std::int64_t n, std::int64_t m, std::uint64_t seed) {
  Rng rng(seed);
  return random_two_connected(n, m, rng);
}

}  // namespace pathturan
