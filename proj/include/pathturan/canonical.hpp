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

// Canonical labelling by partition refinement plus individualisation.
//
// Cells of an ordered partition are refined until equitable, splitting by
// the number of neighbours in a splitter cell. The first non-singleton cell
// is then individualised vertex by vertex (one vertex per twin class) and
// the search recurses. Every leaf is a discrete partition, i.e. a labelling;
// the canonical code is the lexicographically largest adjacency string over
// all leaves. Refinement and individualisation commute with relabelling, so
// the code is an isomorphism invariant, and it determines the graph.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <vector>

#include "pathturan/graph.hpp"
#include "pathturan/small_graph.hpp"

namespace pathturan {

inline constexpr std::size_t kCanonicalCap = 64;

/// Total-order key of a canonical relabelling: the order, then the upper
/// triangle of the relabelled adjacency matrix packed row by row.
struct CanonicalCode {
  int order = 0;
  std::vector<std::uint64_t> bits;

  auto operator<=>(const CanonicalCode&) const = default;
  bool operator==(const CanonicalCode&) const = default;
};

namespace detail {

class Canonizer {
 public:
  explicit Canonizer(const SmallGraph& g) : g_(g) {}

  CanonicalCode run() {
    best_.order = g_.n;
    best_.bits.clear();
    have_best_ = false;
    std::vector<Mask> cells;
    if (g_.n > 0) cells.push_back(g_.vertices());
    refine(cells);
    search(cells);
    if (!have_best_) best_.bits.assign(words(), 0);
    return best_;
  }

  std::vector<int> labelling() const { return best_labelling_; }

 private:
  std::size_t words() const {
    const std::size_t pairs = static_cast<std::size_t>(g_.n) * static_cast<std::size_t>(g_.n > 0 ? g_.n - 1 : 0) / 2;
    return (pairs + 63) / 64;
  }

  // Splits cells until every cell is uniform with respect to every cell.
  void refine(std::vector<Mask>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        const Mask splitter = cells[s];
        for (std::size_t c = 0; c < cells.size(); ++c) {
          const Mask cell = cells[c];
          if (count(cell) == 1) continue;
          // bucket by neighbour count into the splitter
          std::array<Mask, 65> bucket{};
          int distinct = 0;
          for (Mask m = cell; m; m &= m - 1) {
            const int v = lowest(m);
            const int d = count(g_.adj[v] & splitter);
            if (!bucket[d]) ++distinct;
            bucket[d] |= bit_of(v);
          }
          if (distinct == 1) continue;
          std::vector<Mask> pieces;
          for (const Mask b : bucket) {
            if (b) pieces.push_back(b);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
          changed = true;
          break;
        }
      }
    }
  }

  void search(const std::vector<Mask>& cells) {
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (count(cells[i]) > 1) {
        target = i;
        break;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    const Mask cell = cells[target];
    // vertices with identical neighbourhoods (up to each other) give
    // isomorphic subtrees; try one per class
    Mask tried = 0;
    for (Mask m = cell; m; m &= m - 1) {
      const int v = lowest(m);
      bool twin = false;
      for (Mask t = tried; t; t &= t - 1) {
        const int u = lowest(t);
        if ((g_.adj[u] & ~bit_of(v)) == (g_.adj[v] & ~bit_of(u))) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      tried |= bit_of(v);
      std::vector<Mask> next = cells;
      next[target] = bit_of(v);
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(target) + 1, cell & ~bit_of(v));
      refine(next);
      search(next);
    }
  }

  void leaf(const std::vector<Mask>& cells) {
    std::vector<int> perm(static_cast<std::size_t>(g_.n));  // perm[new] = old
    for (std::size_t i = 0; i < cells.size(); ++i) perm[i] = lowest(cells[i]);
    CanonicalCode code;
    code.order = g_.n;
    code.bits.assign(words(), 0);
    std::size_t bit = 0;
    for (int i = 0; i < g_.n; ++i) {
      for (int j = i + 1; j < g_.n; ++j, ++bit) {
        if (g_.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) {
          code.bits[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
        }
      }
    }
    if (!have_best_ || code > best_) {
      best_ = std::move(code);
      best_labelling_ = perm;
      have_best_ = true;
    }
  }

  const SmallGraph& g_;
  CanonicalCode best_;
  std::vector<int> best_labelling_;
  bool have_best_ = false;
};

}  // namespace detail

/// Canonical code: equal for two graphs iff they are isomorphic. Cap: 64.
inline CanonicalCode canonical_code(const Graph& g) {
  const auto sg = SmallGraph::from(g, kCanonicalCap, "canonical_code");
  return detail::Canonizer(sg).run();
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_code(g) == canonical_code(h);
}

}  // namespace pathturan
