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
#include <vector>

#include "pathturan/graph.hpp"
#include "pathturan/small_graph.hpp"

namespace pathturan {

inline constexpr std::size_t kCliqueCap = 64;

namespace detail {

// Branch and bound with a greedy colouring bound on the candidate set.
class MaxClique {
 public:
  explicit MaxClique(const SmallGraph& g) : g_(g) {}

  int run() {
    best_ = 0;
    expand(g_.vertices(), 0);
    return best_;
  }

 private:
  void expand(Mask cand, int size) {
    if (!cand) {
      if (size > best_) best_ = size;
      return;
    }
    std::array<int, 64> order{};
    std::array<int, 64> colour{};
    const int len = colour_sort(cand, order, colour);
    for (int i = len - 1; i >= 0; --i) {
      if (size + colour[i] <= best_) return;
      const int v = order[i];
      expand(cand & g_.adj[v], size + 1);
      cand &= ~bit_of(v);
    }
  }

  // Greedy colouring; vertices come out ordered by colour class.
  int colour_sort(Mask cand, std::array<int, 64>& order, std::array<int, 64>& colour) const {
    int len = 0;
    int c = 0;
    Mask uncoloured = cand;
    while (uncoloured) {
      ++c;
      Mask q = uncoloured;
      while (q) {
        const int v = lowest(q);
        q &= ~g_.adj[v] & ~bit_of(v);
        uncoloured &= ~bit_of(v);
        order[len] = v;
        colour[len] = c;
        ++len;
      }
    }
    return len;
  }

  const SmallGraph& g_;
  int best_ = 0;
};

}  // namespace detail

/// Exact clique number. Cap: order <= 64.
inline int clique_number(const Graph& g) {
  const auto sg = SmallGraph::from(g, kCliqueCap, "clique_number");
  return detail::MaxClique(sg).run();
}

}  // namespace pathturan
