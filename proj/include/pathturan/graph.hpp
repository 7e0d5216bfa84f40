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
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pathturan/checked.hpp"
#include "pathturan/errors.hpp"

namespace pathturan {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Dense bitmask subset of {0, ..., universe-1}.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet of(std::size_t universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<Vertex>(v));
    return s;
  }

  std::size_t universe() const { return universe_; }

  void insert(Vertex v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(Vertex v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  bool contains(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= universe_) return false;
    return (words_[v >> 6] >> (v & 63)) & 1U;
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const { return size() == 0; }

  /// Members in increasing order.
  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
        out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
      }
    }
    return out;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  bool operator==(const VertexSet&) const = default;

 private:
  void check(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= universe_) {
      throw UsageError("vertex " + std::to_string(v) + " outside universe of size " +
                       std::to_string(universe_));
    }
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..n-1 stored as symmetric row
/// bitmasks. Loops are rejected.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order)
      : n_(order), stride_((order + 63) / 64), bits_(order * ((order + 63) / 64), 0) {}

  static Graph complete(std::size_t n) {
    Graph g(n);
    g.add_clique_range(0, static_cast<Vertex>(n));
    return g;
  }

  static Graph path(std::size_t n) {
    Graph g(n);
    for (std::size_t v = 1; v < n; ++v) g.add_edge(static_cast<Vertex>(v - 1), static_cast<Vertex>(v));
    return g;
  }

  static Graph cycle(std::size_t n) {
    require(n >= 3, "cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(0, static_cast<Vertex>(n - 1));
    return g;
  }

  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  std::size_t order() const { return n_; }

  bool adjacent(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return bit(u, v);
  }

  void add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw UsageError("self-loop " + std::to_string(u) + " not allowed in a simple graph");
    set_bit(u, v);
    set_bit(v, u);
  }

  void remove_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    clear_bit(u, v);
    clear_bit(v, u);
  }

  /// Adds every edge inside `members`.
  void add_clique(std::span<const Vertex> members) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) add_edge(members[i], members[j]);
    }
  }

  /// Adds every edge between the two groups (which must be disjoint).
  void add_biclique(std::span<const Vertex> left, std::span<const Vertex> right) {
    for (Vertex u : left) {
      for (Vertex v : right) add_edge(u, v);
    }
  }

  /// Clique on the contiguous block [lo, hi), filled a word at a time.
  void add_clique_range(Vertex lo, Vertex hi) {
    check_range(lo, hi);
    for (Vertex u = lo; u < hi; ++u) set_row_range(u, lo, hi);
    for (Vertex u = lo; u < hi; ++u) clear_bit(u, u);
  }

  /// All edges between the disjoint blocks [lo1, hi1) and [lo2, hi2).
  void add_biclique_range(Vertex lo1, Vertex hi1, Vertex lo2, Vertex hi2) {
    check_range(lo1, hi1);
    check_range(lo2, hi2);
    require(hi1 <= lo2 || hi2 <= lo1, "add_biclique_range: blocks overlap");
    for (Vertex u = lo1; u < hi1; ++u) set_row_range(u, lo2, hi2);
    for (Vertex u = lo2; u < hi2; ++u) set_row_range(u, lo1, hi1);
  }

  std::size_t degree(Vertex v) const {
    check(v);
    std::size_t d = 0;
    for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  std::int64_t edge_count() const {
    std::int64_t twice = 0;
    for (auto w : bits_) twice = checked_add(twice, std::popcount(w));
    return twice / 2;
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    check(v);
    std::vector<Vertex> out;
    auto r = row(v);
    for (std::size_t i = 0; i < r.size(); ++i) {
      for (std::uint64_t w = r[i]; w != 0; w &= w - 1) {
        out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
      }
    }
    return out;
  }

  /// Edges (u, v) with u < v, ordered by u then v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < n_; ++u) {
      for (Vertex v : neighbors(static_cast<Vertex>(u))) {
        if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
      }
    }
    return out;
  }

  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * stride_, stride_};
  }

  /// Neighbourhood of v as a single word; only for graphs of order <= 64.
  std::uint64_t row64(Vertex v) const {
    return stride_ == 0 ? 0 : bits_[static_cast<std::size_t>(v) * stride_];
  }

  bool operator==(const Graph& other) const = default;

 private:
  void check(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= n_) {
      throw UsageError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
    }
  }
  bool bit(Vertex u, Vertex v) const {
    return (bits_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  void set_bit(Vertex u, Vertex v) {
    bits_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  }
  void clear_bit(Vertex u, Vertex v) {
    bits_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  }
  void check_range(Vertex lo, Vertex hi) const {
    if (lo < 0 || hi < lo || static_cast<std::size_t>(hi) > n_) {
      throw UsageError("vertex block [" + std::to_string(lo) + ", " + std::to_string(hi) +
                       ") out of range for order " + std::to_string(n_));
    }
  }
  void set_row_range(Vertex u, Vertex lo, Vertex hi) {
    std::uint64_t* r = bits_.data() + static_cast<std::size_t>(u) * stride_;
    for (Vertex v = lo; v < hi;) {
      const int word = v >> 6;
      const int off = v & 63;
      const int take = std::min(64 - off, hi - v);
      const std::uint64_t mask = (take == 64) ? ~std::uint64_t{0} : (((std::uint64_t{1} << take) - 1) << off);
      r[word] |= mask;
      v += take;
    }
  }

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// G[S] with the vertices of S renumbered 0..|S|-1 in increasing order.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw UsageError("induced_subgraph: repeated vertex in subset");
  }
  for (Vertex v : sorted) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.order()) {
      throw UsageError("induced_subgraph: vertex " + std::to_string(v) + " out of range for order " +
                       std::to_string(g.order()));
    }
  }
  Graph h(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (g.adjacent(sorted[i], sorted[j])) h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return h;
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& subset) {
  if (subset.universe() > g.order()) {
    for (Vertex v : subset.members()) {
      if (static_cast<std::size_t>(v) >= g.order()) {
        throw UsageError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
      }
    }
  }
  auto m = subset.members();
  return induced_subgraph(g, std::span<const Vertex>(m));
}

inline Graph complement(const Graph& g) {
  Graph h(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
        h.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
  }
  return h;
}

/// G followed by H with H's vertices shifted by |G|.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  const auto shift = static_cast<Vertex>(g.order());
  for (auto [u, v] : h.edges()) out.add_edge(u + shift, v + shift);
  return out;
}

/// Disjoint union plus every edge between the two parts.
inline Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  const auto shift = static_cast<Vertex>(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = 0; v < h.order(); ++v) {
      out.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v) + shift);
    }
  }
  return out;
}

/// Relabels vertex v as perm[v].
inline Graph permute(const Graph& g, std::span<const Vertex> perm) {
  require(perm.size() == g.order(), "permute: permutation size mismatch");
  std::vector<char> seen(g.order(), 0);
  for (Vertex p : perm) {
    require(p >= 0 && static_cast<std::size_t>(p) < g.order() && !seen[p], "permute: not a permutation");
    seen[p] = 1;
  }
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

inline std::size_t min_degree(const Graph& g) {
  std::size_t best = g.order() == 0 ? 0 : g.order();
  for (std::size_t v = 0; v < g.order(); ++v) best = std::min(best, g.degree(static_cast<Vertex>(v)));
  return best;
}

/// Connected components, each sorted, ordered by smallest member.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{static_cast<Vertex>(s)};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

/// True iff n >= 3, G is connected and no vertex is a cut vertex. One DFS
/// low-link pass (iterative, so deep graphs do not blow the stack).
inline bool is_two_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return false;
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::vector<Vertex>> nbrs(n);
  for (std::size_t v = 0; v < n; ++v) nbrs[v] = g.neighbors(static_cast<Vertex>(v));
  std::vector<std::size_t> next(n, 0);
  int timer = 0;
  int root_children = 0;
  std::vector<Vertex> stack{0};
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Vertex v = stack.back();
    if (next[v] < nbrs[v].size()) {
      Vertex w = nbrs[v][next[v]++];
      if (disc[w] == -1) {
        parent[w] = v;
        disc[w] = low[w] = timer++;
        if (v == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      stack.pop_back();
      if (parent[v] >= 0) {
        Vertex p = parent[v];
        low[p] = std::min(low[p], low[v]);
        if (p != 0 && low[v] >= disc[p]) return false;
      }
    }
  }
  if (timer != static_cast<int>(n)) return false;
  return root_children <= 1;
}

}  // namespace pathturan
