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

#include <array>
#include <bit>
#include <cstdint>
#include <string>

#include "pathturan/errors.hpp"
#include "pathturan/graph.hpp"

namespace pathturan {

using Mask = std::uint64_t;

inline constexpr Mask bit_of(int v) { return Mask{1} << v; }
inline constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline int count(Mask m) { return std::popcount(m); }

/// Fixed-capacity adjacency for the exact engines: one 64-bit row per vertex.
struct SmallGraph {
  int n = 0;
  std::array<Mask, 64> adj{};

  static SmallGraph from(const Graph& g, std::size_t cap, const char* engine) {
    if (g.order() > cap) {
      throw CapabilityError(std::string(engine) + ": order " + std::to_string(g.order()) +
                            " exceeds the exact-search cap of " + std::to_string(cap));
    }
    SmallGraph s;
    s.n = static_cast<int>(g.order());
    for (int v = 0; v < s.n; ++v) s.adj[v] = g.row64(v);
    return s;
  }

  Mask vertices() const { return low_bits(n); }
  bool adjacent(int u, int v) const { return (adj[u] >> v) & 1U; }
  void add_edge(int u, int v) {
    adj[u] |= bit_of(v);
    adj[v] |= bit_of(u);
  }
  void remove_edge(int u, int v) {
    adj[u] &= ~bit_of(v);
    adj[v] &= ~bit_of(u);
  }
  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n; ++v) twice += count(adj[v]);
    return twice / 2;
  }

  Graph to_graph() const {
    Graph g(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
      for (Mask m = adj[u] & ~low_bits(u + 1); m; m &= m - 1) g.add_edge(u, lowest(m));
    }
    return g;
  }
};

/// Vertices reachable from `from` using only vertices of `allowed` (plus
/// `from` itself).
inline Mask reach(const SmallGraph& g, int from, Mask allowed) {
  Mask seen = bit_of(from);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= g.adj[lowest(f)];
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Twin classes restricted to `allowed`: u and v are twins when
/// N(u) - v == N(v) - u inside `allowed` (true twins when adjacent, false
/// twins otherwise). Any permutation of a class is an automorphism of
/// G[allowed], so a search may always pick the smallest unused member.
/// `pinned` vertices are kept as singletons.
struct TwinClasses {
  /// lower[v]: members of v's class with a smaller index.
  std::array<Mask, 64> lower{};

  static TwinClasses compute(const SmallGraph& g, Mask allowed, Mask pinned = 0) {
    TwinClasses t;
    const Mask free = allowed & ~pinned;
    std::array<int, 64> rep{};
    for (Mask m = free; m; m &= m - 1) {
      const int v = lowest(m);
      rep[v] = v;
      const Mask nv = g.adj[v] & allowed;
      for (Mask p = free & low_bits(v); p; p &= p - 1) {
        const int u = lowest(p);
        if (rep[u] != u) continue;
        const Mask nu = g.adj[u] & allowed;
        if ((nu & ~bit_of(v)) == (nv & ~bit_of(u))) {
          rep[v] = u;
          break;
        }
      }
    }
    for (Mask m = free; m; m &= m - 1) {
      const int v = lowest(m);
      for (Mask p = free & low_bits(v); p; p &= p - 1) {
        const int u = lowest(p);
        if (rep[u] == rep[v]) t.lower[v] |= bit_of(u);
      }
    }
    return t;
  }

  /// Keeps, for each class, only candidates with no smaller unused twin.
  Mask reduce(Mask candidates, Mask unused) const {
    Mask out = 0;
    for (Mask m = candidates; m; m &= m - 1) {
      const int v = lowest(m);
      if ((lower[v] & unused) == 0) out |= bit_of(v);
    }
    return out;
  }
};

/// Connected components of G[allowed] as masks, ordered by smallest vertex.
template <typename Fn>
void for_each_component(const SmallGraph& g, Mask allowed, Fn&& fn) {
  Mask rest = allowed;
  while (rest) {
    const Mask comp = reach(g, lowest(rest), allowed);
    fn(comp);
    rest &= ~comp;
  }
}

inline bool is_clique(const SmallGraph& g, Mask set) {
  for (Mask m = set; m; m &= m - 1) {
    const int v = lowest(m);
    if ((g.adj[v] & set) != (set & ~bit_of(v))) return false;
  }
  return true;
}

}  // namespace pathturan
