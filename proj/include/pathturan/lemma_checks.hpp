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

// Exact checks of the structural properties of H_k(s), H_k(M_2) and
// H_k(P_3), and of the longest path / cycle of H(n,k,a).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathturan/constructions.hpp"
#include "pathturan/forest.hpp"
#include "pathturan/io.hpp"
#include "pathturan/paths.hpp"
#include "pathturan/report.hpp"

namespace pathturan {

inline constexpr std::int64_t kLemmaMaxK = 9;

namespace detail {

// Tallies one named property; the first failure becomes the counterexample.
class PropertyLog {
 public:
  PropertyLog(CheckReport& rep, std::string name, const Graph& g) : rep_(rep), name_(std::move(name)), g_(g) {}

  ~PropertyLog() {
    rep_.details["properties"].push_back(Json{{"property", name_}, {"checked", checked_}, {"holds", failures_ == 0}});
  }

  void expect(bool ok, const Json& item) {
    ++checked_;
    ++rep_.samples;
    if (ok) return;
    ++failures_;
    rep_.violate(Json{{"property", name_}, {"graph6", graph6_encode(g_)}, {"item", item}});
  }

 private:
  CheckReport& rep_;
  std::string name_;
  const Graph& g_;
  std::int64_t checked_ = 0;
  std::int64_t failures_ = 0;
};

inline Graph delete_vertex(const Graph& g, Vertex v) {
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < static_cast<Vertex>(g.order()); ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced_subgraph(g, keep);
}

inline void deletion_property(CheckReport& rep, const std::string& name, const Graph& g, const PathForest& f) {
  PropertyLog log(rep, name, g);
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    log.expect(contains_forest(delete_vertex(g, v), f).found, Json{{"deleted", v}});
  }
}

template <typename Skip>
void edges_on_cycles(CheckReport& rep, const std::string& name, const Graph& g, std::size_t length, Skip&& skip) {
  PropertyLog log(rep, name, g);
  for (auto [u, v] : g.edges()) {
    if (skip(u, v)) continue;
    log.expect(edge_in_cycle_of_length(g, u, v, length), Json::array({u, v}));
  }
}

template <typename Skip>
void hamiltonian_after_adding(CheckReport& rep, const std::string& name, const Graph& g,
                              const std::vector<Vertex>& inside, Skip&& skip) {
  PropertyLog log(rep, name, g);
  for (std::size_t i = 0; i < inside.size(); ++i) {
    for (std::size_t j = i + 1; j < inside.size(); ++j) {
      const Vertex u = inside[i], v = inside[j];
      if (g.adjacent(u, v) || skip(u, v)) continue;
      Graph h = g;
      h.add_edge(u, v);
      log.expect(is_hamiltonian(h), Json::array({u, v}));
    }
  }
}

inline void paths_between(CheckReport& rep, const std::string& name, const Graph& g, const std::vector<Vertex>& xs,
                          const std::vector<Vertex>& ys, std::size_t order) {
  PropertyLog log(rep, name, g);
  for (Vertex x : xs) {
    for (Vertex y : ys) {
      if (x == y) continue;
      log.expect(path_of_order_between(g, x, y, order).has_value(), Json::array({x, y}));
    }
  }
}

inline std::vector<Vertex> join_roles(const ConstructionSpec& spec, std::initializer_list<const char*> labels) {
  std::vector<Vertex> out;
  for (const char* l : labels) {
    auto m = spec.members(l);
    out.insert(out.end(), m.begin(), m.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline auto no_skip = [](Vertex, Vertex) { return false; };

}  // namespace detail

/// Properties (i)-(iv) of H_k(s) (1 <= s <= k-1) and H_k(M_2) for
/// k = k1 + k2 + 1, with forest P_{2k1+1} u P_{2k2+1}.
inline CheckReport check_lemma31(std::int64_t k1, std::int64_t k2) {
  require(k1 >= 2 && k2 >= 1 && k1 >= k2, "check_lemma31 needs k1 >= k2, k1 >= 2, k2 >= 1");
  const std::int64_t k = k1 + k2 + 1;
  require_capability(k <= kLemmaMaxK, "check_lemma31: k = k1 + k2 + 1 exceeds the exact cap of 9");
  CheckReport rep;
  rep.suite = "lemma31";
  rep.params = Json{{"k1", k1}, {"k2", k2}, {"k", k}};
  rep.details["properties"] = Json::array();
  const PathForest f{static_cast<int>(2 * k1 + 1), static_cast<int>(2 * k2 + 1)};
  const auto two_k = static_cast<std::size_t>(2 * k);

  auto run = [&](const Construction& c, const std::string& tag, bool deletion, bool cycles_and_paths) {
    const Graph& g = c.graph;
    if (deletion) detail::deletion_property(rep, "(i) " + tag, g, f);
    if (cycles_and_paths) detail::edges_on_cycles(rep, "(ii) " + tag, g, two_k, detail::no_skip);
    detail::hamiltonian_after_adding(rep, "(iii) " + tag, g, detail::join_roles(c.spec, {"A", "B", "D"}),
                                     detail::no_skip);
    if (cycles_and_paths) {
      detail::paths_between(rep, "(iv) " + tag, g, c.spec.members("C"), c.spec.members("D"), two_k);
    }
  };
  for (std::int64_t s = 1; s <= k - 1; ++s) {
    run(build_Hks(k, s), "Hks(s=" + std::to_string(s) + ")", s == 1, s <= k - 2);
  }
  run(build_HkM2(k), "HkM2", true, true);
  return rep;
}

/// Properties (i)-(iv) of H_k(P_3) for k = k1 + k2 + 1.
inline CheckReport check_lemma32(std::int64_t k1, std::int64_t k2) {
  require(k1 >= k2 && k2 >= 2, "check_lemma32 needs k1 >= k2 >= 2");
  const std::int64_t k = k1 + k2 + 1;
  require_capability(k <= kLemmaMaxK, "check_lemma32: k = k1 + k2 + 1 exceeds the exact cap of 9");
  CheckReport rep;
  rep.suite = "lemma32";
  rep.params = Json{{"k1", k1}, {"k2", k2}, {"k", k}};
  rep.details["properties"] = Json::array();
  const PathForest f{static_cast<int>(2 * k1 + 1), static_cast<int>(2 * k2 + 1)};
  const auto two_k = static_cast<std::size_t>(2 * k);
  const Construction c = build_HkP3(k);
  const Graph& g = c.graph;
  const Vertex a1 = c.spec.members("a1")[0], a2 = c.spec.members("a2")[0], a3 = c.spec.members("a3")[0];
  const auto side_b = c.spec.members("B");
  const auto side_c = c.spec.members("C");
  auto in_b = [&](Vertex v) { return std::find(side_b.begin(), side_b.end(), v) != side_b.end(); };

  detail::deletion_property(rep, "(i) HkP3", g, f);
  detail::edges_on_cycles(rep, "(ii) HkP3 edges off a2-B", g, two_k,
                          [&](Vertex u, Vertex v) { return (u == a2 && in_b(v)) || (v == a2 && in_b(u)); });
  detail::paths_between(rep, "(ii) HkP3 a1-a3 path", g, {a1}, {a3}, two_k);

  std::vector<Vertex> inside = side_c;
  inside.push_back(a1);
  inside.push_back(a3);
  std::sort(inside.begin(), inside.end());
  detail::hamiltonian_after_adding(rep, "(iii) HkP3 added edge", g, inside, [&](Vertex u, Vertex v) {
    return (u == a1 && v == a3) || (u == a3 && v == a1);
  });
  detail::paths_between(rep, "(iii) HkP3 a2-C paths", g, {a2}, side_c, two_k);

  std::vector<Vertex> ends = side_b;
  ends.push_back(a2);
  detail::paths_between(rep, "(iv) HkP3 paths inside B+a2", g, ends, ends, two_k - 1);
  Graph plus = g;
  plus.add_edge(a1, a3);
  detail::paths_between(rep, "(iv) HkP3+a1a3 B-a2 paths", plus, side_b, {a2}, two_k);
  return rep;
}

/// Longest path exactly k vertices and circumference exactly k-1 for
/// H(n,k,a) over 1 <= a, 2a <= k <= n <= n_max, k <= k_max. The statement
/// is false when A is empty (k = 2a: B and C alternate around a k-cycle)
/// and when k = 3 (no cycle exists). Those points are measured and listed
/// under details.degenerate with a statement_holds flag; they do not count
/// as samples or violations. Every other point must satisfy the statement.
inline CheckReport check_remark_hnka(std::int64_t n_max = 14, std::int64_t k_max = 9) {
  require(n_max <= static_cast<std::int64_t>(kPathSearchCap), "check_remark_hnka: n_max above the path cap");
  CheckReport rep;
  rep.suite = "remark-hnka";
  rep.params = Json{{"n_max", n_max}, {"k_max", k_max}};
  Json degenerate = Json::array();
  std::int64_t degenerate_failures = 0;
  for (std::int64_t k = 2; k <= k_max; ++k) {
    for (std::int64_t a = 1; 2 * a <= k; ++a) {
      for (std::int64_t n = k; n <= n_max; ++n) {
        const Graph g = build_H(n, k, a).graph;
        const auto path = static_cast<std::int64_t>(longest_path(g).order);
        const auto cyc = static_cast<std::int64_t>(circumference(g));
        const bool holds = path == k && cyc == k - 1;
        if (2 * a == k || k == 3) {
          degenerate_failures += holds ? 0 : 1;
          degenerate.push_back(Json{{"n", n},
                                    {"k", k},
                                    {"a", a},
                                    {"longest_path", path},
                                    {"circumference", cyc},
                                    {"statement_holds", holds}});
          continue;
        }
        ++rep.samples;
        if (!holds) {
          rep.violate(Json{{"graph6", graph6_encode(g)},
                           {"n", n},
                           {"k", k},
                           {"a", a},
                           {"longest_path", path},
                           {"circumference", cyc}});
        }
      }
    }
  }
  rep.details["degenerate"] = degenerate;
  rep.details["degenerate_failures"] = degenerate_failures;
  if (degenerate_failures > 0) {
    rep.notes.push_back("statement fails at " + std::to_string(degenerate_failures) +
                        " degenerate points (k = 2a or k = 3); see details.degenerate");
  }
  return rep;
}

}  // namespace pathturan
