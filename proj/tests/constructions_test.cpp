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

#include <functional>

#include "naive_oracles.hpp"
#include "pathturan/constructions.hpp"
#include "pathturan/formulas.hpp"
#include "pathturan/io.hpp"

namespace pathturan {
namespace {

using Pred = std::function<bool(int, int)>;

// Builds the adjacency matrix of the graph whose edges are the pairs
// (1-based labels) accepted by `edge`.
naive::Adj from_predicate(int n, const Pred& edge) {
  naive::Adj a(n, std::vector<char>(n, 0));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (edge(i, j) || edge(j, i)) a[i - 1][j - 1] = a[j - 1][i - 1] = 1;
    }
  }
  return a;
}

naive::Adj hks_oracle(int k, int s) {
  const int n = 2 * k + 1;
  auto in_a = [=](int i) { return i <= s; };
  auto in_b = [=](int i) { return i > n - s; };
  auto in_c = [=](int i) { return i >= s + 1 && i <= 2 * k - s + 1 && (i - s - 1) % 2 == 0; };
  return from_predicate(n, [=](int i, int j) {
    return j == i + 1 || (in_a(i) && in_a(j)) || (in_b(i) && in_b(j)) || (in_c(i) && (in_a(j) || in_b(j)));
  });
}

TEST(Constructions, HEdgeCountsMatchPairCount) {
  for (std::int64_t n = 2; n <= 40; ++n) {
    for (std::int64_t k = 2; k <= n; ++k) {
      for (std::int64_t a = 1; 2 * a <= k; ++a) {
        ASSERT_EQ(build_H(n, k, a).graph.edge_count(), naive::h(n, k, a));
      }
    }
  }
  const Construction c = build_H(10, 8, 2);
  EXPECT_EQ(c.graph.edge_count(), 23);
  EXPECT_EQ(c.spec.members("A").size(), 4u);
  EXPECT_EQ(c.spec.members("B").size(), 2u);
  EXPECT_EQ(c.spec.members("C").size(), 4u);
}

TEST(Constructions, HHasShortCircumference) {
  for (std::int64_t n = 4; n <= 8; ++n) {
    for (std::int64_t k = 4; k <= n; ++k) {
      for (std::int64_t a = 1; 2 * a <= k; ++a) {
        const int c = naive::circumference(naive::adj(build_H(n, k, a).graph));
        // with A empty, B and C alternate around a k-cycle
        if (2 * a < k) {
          EXPECT_LT(c, k) << n << ' ' << k << ' ' << a;
        } else {
          EXPECT_EQ(c, k) << n << ' ' << k << ' ' << a;
        }
      }
    }
  }
}

TEST(Constructions, ZMatchesDescription) {
  const Construction z = build_Z(10, 7, 3);
  EXPECT_EQ(z.graph.edge_count(), 21);
  const auto a = naive::adj(z.graph);
  EXPECT_EQ(naive::circumference(a), 6);
  EXPECT_EQ(naive::clique_number(a), 4);
  EXPECT_EQ(z.spec.members("apex").size(), 2u);
  for (std::int64_t t = 2; t <= 5; ++t) {
    for (std::int64_t k = t + 2; k <= 12; ++k) {
      for (std::int64_t l = 2; l <= 4; ++l) {
        const std::int64_t n = 2 + (k - t - 2) + l * (t - 1);
        const std::int64_t expect = 1 + 2 * (n - 2) + naive::clique_edges(k - t - 2) + l * naive::clique_edges(t - 1);
        EXPECT_EQ(z_block_count(n, k, t), l);
        EXPECT_EQ(build_Z(n, k, t).graph.edge_count(), expect);
      }
    }
  }
  EXPECT_EQ(z_block_count(11, 7, 3), -1);
  EXPECT_THROW(build_Z(11, 7, 3), UsageError);
  EXPECT_THROW(build_Z(10, 4, 3), UsageError);
}

TEST(Constructions, HksMatchesOracle) {
  EXPECT_EQ(build_Hks(5, 2).graph.edge_count(), 24);
  for (int k = 4; k <= 9; ++k) {
    for (int s = 1; s <= k - 1; ++s) {
      const Construction c = build_Hks(k, s);
      EXPECT_EQ(naive::adj(c.graph), hks_oracle(k, s)) << k << ' ' << s;
      EXPECT_EQ(c.spec.members("A").size(), static_cast<std::size_t>(s));
      EXPECT_EQ(c.spec.members("B").size(), static_cast<std::size_t>(s));
    }
  }
  EXPECT_THROW(build_Hks(3, 1), UsageError);
  EXPECT_THROW(build_Hks(5, 5), UsageError);
}

TEST(Constructions, HkM2AndHkP3) {
  for (int k = 4; k <= 9; ++k) {
    const int n = 2 * k + 1;
    const naive::Adj m2 = from_predicate(n, [=](int i, int j) {
      auto in_c = [=](int v) { return v >= 3 && v <= 2 * k - 1 && v % 2 == 1; };
      return (in_c(i) && !in_c(j)) || (i == 1 && j == 2) || (i == 2 * k && j == 2 * k + 1);
    });
    EXPECT_EQ(naive::adj(build_HkM2(k).graph), m2);
    const naive::Adj p3 = from_predicate(n, [=](int i, int j) {
      auto in_b = [=](int v) { return v >= 4 && v <= k + 2; };
      return (in_b(i) && !in_b(j)) || (i == 1 && j == 2) || (i == 2 && j == 3);
    });
    EXPECT_EQ(naive::adj(build_HkP3(k).graph), p3);
  }
  EXPECT_EQ(build_HkM2(5).graph.edge_count(), 30);
  EXPECT_EQ(build_HkP3(5).graph.edge_count(), 30);
  EXPECT_EQ(build_HkP3(5).spec.members("B").size(), 4u);
}

TEST(Constructions, Fkt) {
  EXPECT_EQ(build_Fkt(3, 2).graph.edge_count(), 14);
  for (int k = 3; k <= 7; ++k) {
    for (int t = 2; t <= 5; ++t) {
      const int n = 2 * k + t;
      const naive::Adj f = from_predicate(n, [=](int i, int j) {
        const bool a_i = i <= k, a_j = j <= k, b_i = i >= k + t + 1, b_j = j >= k + t + 1;
        return (a_i && a_j) || (b_i && b_j) || (i >= k && j == i + 1 && j <= k + t + 1) || (i == k && b_j) ||
               (i == k + t + 1 && a_j);
      });
      EXPECT_EQ(naive::adj(build_Fkt(k, t).graph), f) << k << ' ' << t;
    }
  }
}

TEST(Constructions, ExtremalFamilies) {
  for (std::int64_t k = 3; k <= 9; ++k) {
    for (std::int64_t n = 0; n <= 50; ++n) ASSERT_EQ(build_path_extremal(n, k).graph.edge_count(), naive::ex_path(n, k));
  }
  for (std::int64_t s = 3; s <= 9; ++s) {
    for (std::int64_t t = 3; t <= s; ++t) {
      for (std::int64_t n = s + t - 1; n <= 50; ++n) {
        ASSERT_EQ(build_pair_witness(n, s, t).graph.edge_count(), naive::c_def(n, s + t, t));
      }
    }
  }
  const Construction w = build_pair_witness(12, 5, 5);
  EXPECT_EQ(w.graph.edge_count(), 39);
  EXPECT_EQ(naive::longest_path(naive::adj(build_path_extremal(7, 4).graph)), 3);
}

TEST(Constructions, TuranAndComplete) {
  for (std::int64_t r = 1; r <= 6; ++r) {
    for (std::int64_t n = 0; n <= 30; ++n) {
      std::int64_t expect = naive::clique_edges(n);
      for (std::int64_t p = 0; p < r; ++p) expect -= naive::clique_edges(n / r + (p < n % r ? 1 : 0));
      ASSERT_EQ(build_turan(n, r).graph.edge_count(), expect);
    }
  }
  EXPECT_EQ(build_complete(9).graph.edge_count(), 36);
}

TEST(Constructions, RebuildRoundTrip) {
  const std::vector<Construction> all{build_H(12, 8, 3), build_Z(10, 7, 3), build_Hks(6, 3), build_HkM2(5),
                                      build_HkP3(6),     build_Fkt(4, 3),   build_path_extremal(11, 4),
                                      build_pair_witness(14, 5, 3), build_turan(9, 4), build_complete(5)};
  for (const Construction& c : all) {
    const Construction again = rebuild(c.spec);
    EXPECT_EQ(again.graph, c.graph) << c.spec.describe();
    EXPECT_EQ(again.spec.roles, c.spec.roles);
    EXPECT_EQ(graph6_decode(graph6_encode(c.graph)), c.graph);
  }
  ConstructionSpec bad{Family::kH, {12, 8}, {}, {}};
  EXPECT_THROW(rebuild(bad), UsageError);
}

TEST(Constructions, RejectsBadParameters) {
  EXPECT_THROW(build_H(5, 8, 2), UsageError);
  EXPECT_THROW(build_H(10, 8, 5), UsageError);
  EXPECT_THROW(build_H(10, 8, 0), UsageError);
  EXPECT_THROW(build_Fkt(2, 2), UsageError);
  EXPECT_THROW(build_pair_witness(6, 5, 3), UsageError);
  EXPECT_THROW(build_path_extremal(5, 2), UsageError);
  EXPECT_THROW(build_complete(std::int64_t{1} << 30), UsageError);
}

}  // namespace
}  // namespace pathturan
