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
#include <array>
#include <optional>
#include <vector>

#include "pathturan/constructions.hpp"
#include "pathturan/errors.hpp"
#include "pathturan/graph.hpp"
#include "pathturan/paths.hpp"
#include "pathturan/small_graph.hpp"

namespace pathturan {

inline constexpr std::size_t kPatternCap = 24;
inline constexpr std::size_t kSubgraphHostCap = 32;

namespace detail {

// Backtracking embedding of a pattern into a host (not necessarily induced).
class Embedder {
 public:
  Embedder(const SmallGraph& host, const SmallGraph& pattern) : g_(host), h_(pattern) {
    twins_ = TwinClasses::compute(g_, g_.vertices());
    for (int v = 0; v < g_.n; ++v) host_degree_[v] = count(g_.adj[v]);
    order_pattern();
  }

  bool run() {
    map_.assign(static_cast<std::size_t>(h_.n), -1);
    if (h_.n > g_.n) return false;
    return place(0, g_.vertices());
  }

  /// map[pattern vertex] = host vertex.
  const std::vector<int>& mapping() const { return map_; }

 private:
  // Most constrained first: each next vertex has the most already-placed
  // neighbours, ties broken by degree.
  void order_pattern() {
    Mask placed = 0;
    for (int step = 0; step < h_.n; ++step) {
      int best = -1;
      int best_links = -1;
      int best_degree = -1;
      for (int v = 0; v < h_.n; ++v) {
        if (placed & bit_of(v)) continue;
        const int links = count(h_.adj[v] & placed);
        const int degree = count(h_.adj[v]);
        if (links > best_links || (links == best_links && degree > best_degree)) {
          best = v;
          best_links = links;
          best_degree = degree;
        }
      }
      order_.push_back(best);
      placed |= bit_of(best);
    }
  }

  bool place(std::size_t idx, Mask unused) {
    if (idx == order_.size()) return true;
    const int p = order_[idx];
    const int need = count(h_.adj[p]);
    Mask cand = unused;
    for (std::size_t j = 0; j < idx; ++j) {
      const int q = order_[j];
      if (h_.adj[p] & bit_of(q)) cand &= g_.adj[map_[static_cast<std::size_t>(q)]];
    }
    cand = twins_.reduce(cand, unused);
    for (; cand; cand &= cand - 1) {
      const int v = lowest(cand);
      if (host_degree_[v] < need) continue;
      map_[static_cast<std::size_t>(p)] = v;
      if (place(idx + 1, unused & ~bit_of(v))) return true;
    }
    map_[static_cast<std::size_t>(p)] = -1;
    return false;
  }

  const SmallGraph& g_;
  const SmallGraph& h_;
  TwinClasses twins_;
  std::array<int, 64> host_degree_{};
  std::vector<int> order_;
  std::vector<int> map_;
};

}  // namespace detail

/// Exact (not induced) subgraph containment. Returns an injective map from
/// pattern vertices to host vertices on success. Caps: |H| <= 24, |G| <= 32.
inline std::optional<std::vector<Vertex>> find_subgraph(const Graph& g, const Graph& h) {
  const auto host = SmallGraph::from(g, kSubgraphHostCap, "contains_subgraph");
  const auto pattern = SmallGraph::from(h, kPatternCap, "contains_subgraph");
  if (h.edge_count() > g.edge_count()) return std::nullopt;
  detail::Embedder e(host, pattern);
  if (!e.run()) return std::nullopt;
  return e.mapping();
}

inline bool contains_subgraph(const Graph& g, const Graph& h) { return find_subgraph(g, h).has_value(); }

enum class FamilyVerdict { kLongCycle, kHk1, kHkM2, kHkP3, kNone };

inline const char* verdict_name(FamilyVerdict v) {
  switch (v) {
    case FamilyVerdict::kLongCycle: return "cycle>=2k+1";
    case FamilyVerdict::kHk1: return "Hk1";
    case FamilyVerdict::kHkM2: return "HkM2";
    case FamilyVerdict::kHkP3: return "HkP3";
    case FamilyVerdict::kNone: return "none";
  }
  return "?";
}

/// First member of {cycles of length >= 2k+1, H_k(1), H_k(M_2), H_k(P_3)}
/// contained in G, cycle test first.
inline FamilyVerdict contains_family_F(const Graph& g, std::int64_t k) {
  require(k >= 4, "contains_family_F needs k >= 4");
  require_capability(2 * k + 1 <= static_cast<std::int64_t>(kPatternCap),
                     "contains_family_F: 2k+1 exceeds the pattern cap of 24");
  require_capability(g.order() <= kSubgraphHostCap, "contains_family_F: host order exceeds the cap of 32");
  if (static_cast<std::int64_t>(g.order()) < 2 * k + 1) return FamilyVerdict::kNone;
  if (has_cycle_at_least(g, static_cast<std::size_t>(2 * k + 1))) return FamilyVerdict::kLongCycle;
  if (contains_subgraph(g, build_Hks(k, 1).graph)) return FamilyVerdict::kHk1;
  if (contains_subgraph(g, build_HkM2(k).graph)) return FamilyVerdict::kHkM2;
  if (contains_subgraph(g, build_HkP3(k).graph)) return FamilyVerdict::kHkP3;
  return FamilyVerdict::kNone;
}

}  // namespace pathturan
