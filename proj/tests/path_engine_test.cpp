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

#include <gtest/gtest.h>

#include <random>

#include "naive_oracles.hpp"
#include "pathturan/constructions.hpp"
#include "pathturan/forest.hpp"
#include "pathturan/paths.hpp"

namespace pathturan {
namespace {

// Copy of the forest whose consecutive vertices include the pair {u, v}.
bool naive_forest_through(const naive::Adj& a, const std::vector<int>& orders, int u, int v) {
  const int n = naive::order(a);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int pos = 0;
    bool ok = true, uses = false;
    for (int k : orders) {
      if (pos + k > n) {
        ok = false;
        break;
      }
      for (int i = 1; ok && i < k; ++i) {
        const int x = perm[pos + i - 1], y = perm[pos + i];
        ok = a[x][y];
        uses = uses || (x == u && y == v) || (x == v && y == u);
      }
      pos += k;
      if (!ok) break;
    }
    if (ok && uses) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Vertices surviving repeated deletion of degree <= alpha, by recomputing
// all degrees after each round.
std::vector<char> naive_core(const naive::Adj& a, std::int64_t alpha) {
  const int n = naive::order(a);
  std::vector<char> alive(n, 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      std::int64_t d = 0;
      for (int w = 0; w < n; ++w) d += alive[w] && a[v][w];
      if (d <= alpha) {
        alive[v] = 0;
        changed = true;
      }
    }
  }
  return alive;
}

TEST(Paths, LongestPathMatchesNaive) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = trial % 9;
    const auto a = naive::random_adj(n, 0.35, rng);
    const Graph g = naive::to_graph(a);
    const LongestPath lp = longest_path(g);
    ASSERT_EQ(static_cast<int>(lp.order), naive::longest_path(a)) << naive::graph6(a);
    if (n == 0) continue;
    EXPECT_TRUE(is_valid_witness(g, lp.witness));
    std::vector<int> lex;
    naive::for_each_path(a, [&](const std::vector<int>& p) {
      if (static_cast<int>(p.size()) == naive::longest_path(a) && (lex.empty() || p < lex)) lex = p;
    });
    EXPECT_EQ(lp.witness.vertices, lex) << naive::graph6(a);
  }
}

TEST(Paths, CircumferenceAndHamiltonicity) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = trial % 9;
    const auto a = naive::random_adj(n, 0.45, rng);
    const Graph g = naive::to_graph(a);
    const int c = naive::circumference(a);
    ASSERT_EQ(static_cast<int>(circumference(g)), c) << naive::graph6(a);
    const auto cyc = longest_cycle(g);
    EXPECT_EQ(cyc.has_value(), c > 0);
    if (cyc) {
      EXPECT_TRUE(is_valid_witness(g, *cyc));
      EXPECT_EQ(static_cast<int>(cyc->order()), c);
    }
    for (int len = 3; len <= n; ++len) EXPECT_EQ(has_cycle_at_least(g, len), c >= len);
    EXPECT_EQ(is_hamiltonian(g), naive::hamiltonian(a)) << naive::graph6(a);
    const auto h = hamilton_cycle(g);
    EXPECT_EQ(h.has_value(), naive::hamiltonian(a));
    if (h) {
      EXPECT_TRUE(is_valid_witness(g, *h));
    }
  }
  EXPECT_EQ(circumference(build_Z(10, 7, 3).graph), 6u);
}

TEST(Paths, PathsBetweenMatchNaive) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 7;
    const auto a = naive::random_adj(n, 0.5, rng);
    const Graph g = naive::to_graph(a);
    const int x = 0, y = n - 1;
    int longest = 0;
    for (int k = 2; k <= n; ++k) {
      const bool expect = naive::path_between_of_order(a, x, y, k);
      const auto w = path_of_order_between(g, x, y, static_cast<std::size_t>(k));
      ASSERT_EQ(w.has_value(), expect) << naive::graph6(a) << " k=" << k;
      if (w) {
        EXPECT_TRUE(is_valid_witness(g, *w));
        EXPECT_EQ(w->vertices.front(), x);
        EXPECT_EQ(w->vertices.back(), y);
        EXPECT_EQ(static_cast<int>(w->order()), k);
        longest = k;
      }
    }
    const auto lpb = longest_path_between(g, x, y);
    EXPECT_EQ(lpb.has_value(), longest > 0);
    if (lpb) {
      EXPECT_EQ(static_cast<int>(lpb->order()), longest);
    }
  }
}

TEST(Paths, EdgeInCycle) {
  const Graph c6 = Graph::cycle(6);
  EXPECT_TRUE(edge_in_cycle_of_length(c6, 0, 1, 6));
  EXPECT_FALSE(edge_in_cycle_of_length(c6, 0, 1, 5));
  EXPECT_THROW(edge_in_cycle_of_length(c6, 0, 2, 4), UsageError);
}

TEST(Forest, ContainmentMatchesNaive) {
  const std::vector<PathForest> forests{{2, 2}, {3}, {3, 2}, {4}, {2, 2, 2}, {3, 3}, {4, 2}, {5}};
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + trial % 5;
    const auto a = naive::random_adj(n, 0.4, rng);
    const Graph g = naive::to_graph(a);
    for (const PathForest& f : forests) {
      const ForestMatch m = contains_forest(g, f);
      ASSERT_EQ(m.found, naive::contains_forest(a, f.orders())) << naive::graph6(a) << ' ' << f.to_string();
      if (m.found) {
        EXPECT_TRUE(is_valid_forest_match(g, f, m));
      }
    }
  }
}

TEST(Forest, ThroughEdgeMatchesNaive) {
  const std::vector<PathForest> forests{{2, 2}, {3, 2}, {4}, {3, 3}};
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 4 + trial % 4;
    const auto a = naive::random_adj(n, 0.5, rng);
    const Graph g = naive::to_graph(a);
    for (auto [u, v] : g.edges()) {
      for (const PathForest& f : forests) {
        const ForestMatch m = contains_forest_through_edge(g, f, u, v);
        ASSERT_EQ(m.found, naive_forest_through(a, f.orders(), u, v)) << naive::graph6(a) << ' ' << f.to_string();
        if (m.found) {
          EXPECT_TRUE(is_valid_forest_match(g, f, m));
        }
      }
    }
  }
}

TEST(Forest, RejectsForgedMatches) {
  const Graph g = Graph::path(6);
  const PathForest f{3, 2};
  ForestMatch m = contains_forest(g, f);
  ASSERT_TRUE(m.found);
  EXPECT_TRUE(is_valid_forest_match(g, f, m));
  ForestMatch overlap = m;
  overlap.paths[1].vertices = {overlap.paths[0].vertices[0], overlap.paths[0].vertices[1]};
  EXPECT_FALSE(is_valid_forest_match(g, f, overlap));
  ForestMatch wrong_order = m;
  std::swap(wrong_order.paths[0], wrong_order.paths[1]);
  EXPECT_FALSE(is_valid_forest_match(g, f, wrong_order));
  EXPECT_FALSE(is_valid_forest_match(g, f, ForestMatch{}));
}

TEST(Forest, KnownExtremalGraphs) {
  // K_9 plus an isolated vertex is free of two disjoint P_5
  Graph g = Graph::complete(9);
  g = disjoint_union(g, Graph(1));
  EXPECT_FALSE(contains_forest(g, PathForest{5, 5}).found);
  EXPECT_TRUE(contains_forest(Graph::complete(10), PathForest{5, 5}).found);
  EXPECT_FALSE(contains_forest(build_pair_witness(12, 5, 5).graph, PathForest{5, 5}).found);
  EXPECT_FALSE(contains_forest(build_H(20, 10, 4).graph, PathForest{7, 5}).found);
}

TEST(Forest, Caps) {
  EXPECT_THROW(contains_forest(Graph(33), PathForest{3}), CapabilityError);
  EXPECT_THROW(contains_forest(Graph(30), PathForest{13, 12}), CapabilityError);
  EXPECT_THROW(longest_path(Graph(33)), CapabilityError);
  EXPECT_THROW(circumference(Graph(33)), CapabilityError);
  EXPECT_THROW(is_hamiltonian(Graph(25)), CapabilityError);
  EXPECT_NO_THROW(is_hamiltonian(Graph::cycle(24)));
}

TEST(Posa, BoundHoldsOnTwoConnectedGraphs) {
  std::mt19937_64 rng(26);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + trial % 6;
    const auto a = naive::random_adj(n, 0.55, rng);
    if (!naive::two_connected(a)) continue;
    const Graph g = naive::to_graph(a);
    const LongestPath lp = longest_path(g);
    // a longest path is maximal, so its ends see only path vertices
    EXPECT_GE(naive::circumference(a), posa_bound(g, lp.witness)) << naive::graph6(a);
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(Posa, Examples) {
  Graph g = Graph::path(5);
  g.add_edge(0, 2);
  g.add_edge(4, 2);
  const PathWitness p{PathWitness::Kind::kPath, {0, 1, 2, 3, 4}};
  EXPECT_EQ(posa_bound(g, p), 4);
  g.add_edge(0, 3);
  g.add_edge(4, 1);
  EXPECT_EQ(posa_bound(g, p), 5);
  EXPECT_THROW(posa_bound(g, PathWitness{PathWitness::Kind::kPath, {0, 4, 3}}), UsageError);
}

TEST(Disintegration, MatchesNaiveCore) {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = trial % 14;
    const auto a = naive::random_adj(n, 0.4, rng);
    const Graph g = naive::to_graph(a);
    for (std::int64_t alpha = 0; alpha <= 5; ++alpha) {
      const auto core = naive_core(a, alpha);
      const Disintegration d = alpha_disintegration(g, alpha);
      const Disintegration last = alpha_disintegration(g, alpha, [](std::span<const Vertex> e) { return e.back(); });
      for (int v = 0; v < n; ++v) {
        ASSERT_EQ(d.remaining.contains(v), core[v] != 0);
        ASSERT_EQ(last.remaining.contains(v), core[v] != 0);
      }
      EXPECT_EQ(d.deleted.size() + d.remaining.size(), static_cast<std::size_t>(n));
    }
  }
}

}  // namespace
}  // namespace pathturan
