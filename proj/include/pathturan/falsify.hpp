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

// Randomised property suites. Each suite draws graphs from the hypothesis
// class of a known statement and checks its conclusion with the exact
// engines. Sample i always uses substream i of the seed, and the reported
// counterexample is the one with the smallest sample index, so the report
// does not depend on the worker count.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pathturan/canonical.hpp"
#include "pathturan/clique.hpp"
#include "pathturan/constructions.hpp"
#include "pathturan/formulas.hpp"
#include "pathturan/forest.hpp"
#include "pathturan/generators.hpp"
#include "pathturan/io.hpp"
#include "pathturan/local_search.hpp"
#include "pathturan/paths.hpp"
#include "pathturan/report.hpp"
#include "pathturan/rng.hpp"
#include "pathturan/subgraph.hpp"

namespace pathturan {

struct FalsifyOptions {
  std::int64_t samples = 1000;
  std::uint64_t seed = 42;
  int workers = 1;
  std::int64_t n_max = 14;
};

inline constexpr std::int64_t kFalsifyOrderCap = 16;

inline const std::vector<std::string>& falsify_suites() {
  static const std::vector<std::string> names{"posa", "fan", "kopylov", "yuan", "stability", "connected-bound"};
  return names;
}

namespace detail {

struct SampleResult {
  /// False when the sample fell outside the statement's hypothesis.
  bool in_hypothesis = true;
  std::optional<Json> counterexample;
  /// Optional bucket name tallied under details.tags.
  std::string tag;
};

using SampleFn = std::function<SampleResult(std::int64_t index, Rng& rng)>;

inline CheckReport run_samples(const std::string& suite, const FalsifyOptions& opt, Json params, const SampleFn& fn) {
  CheckReport rep;
  rep.suite = suite;
  params["seed"] = opt.seed;
  params["samples"] = opt.samples;
  params["n_max"] = opt.n_max;
  rep.params = std::move(params);

  const auto total = static_cast<std::size_t>(opt.samples);
  std::vector<SampleResult> results(total);
  std::vector<char> done(total, 0);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_bad{total};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      if (i > first_bad.load()) continue;  // a smaller index already failed
      Rng rng(substream_seed(opt.seed, i));
      results[i] = fn(static_cast<std::int64_t>(i), rng);
      done[i] = 1;
      if (results[i].counterexample) {
        std::size_t cur = first_bad.load();
        while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  const int threads = std::max(1, std::min<int>(opt.workers, static_cast<int>(std::max<std::size_t>(total, 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Only samples up to the first failure count, which keeps tallies
  // independent of scheduling.
  const std::size_t stop = first_bad.load();
  std::int64_t vacuous = 0;
  std::map<std::string, std::int64_t> tags;
  for (std::size_t i = 0; i < total && i <= stop; ++i) {
    if (!done[i]) continue;
    ++rep.samples;
    if (!results[i].in_hypothesis) ++vacuous;
    if (!results[i].tag.empty()) ++tags[results[i].tag];
    if (results[i].counterexample) {
      Json cert = *results[i].counterexample;
      cert["sample"] = static_cast<std::int64_t>(i);
      rep.violate(std::move(cert));
    }
  }
  rep.details["in_hypothesis"] = rep.samples - vacuous;
  rep.details["vacuous"] = vacuous;
  if (!tags.empty()) rep.details["tags"] = tags;
  return rep;
}

inline std::int64_t draw_order(Rng& rng, std::int64_t lo, std::int64_t hi) { return rng.between(lo, hi); }

inline Graph draw_two_connected(Rng& rng, std::int64_t n) {
  const std::int64_t m = rng.between(n, choose2(n));
  return random_two_connected(n, m, rng);
}

/// A path that cannot be extended at either end, grown from a random vertex.
inline PathWitness random_maximal_path(const Graph& g, Rng& rng) {
  std::vector<Vertex> path{static_cast<Vertex>(rng.below(g.order()))};
  std::vector<char> used(g.order(), 0);
  used[path[0]] = 1;
  for (int side = 0; side < 2; ++side) {
    while (true) {
      std::vector<Vertex> free;
      for (Vertex w : g.neighbors(path.back())) {
        if (!used[w]) free.push_back(w);
      }
      if (free.empty()) break;
      const Vertex w = rng.pick(free);
      used[w] = 1;
      path.push_back(w);
    }
    std::reverse(path.begin(), path.end());
  }
  return PathWitness{PathWitness::Kind::kPath, path};
}

inline Json edge_json(Vertex a, Vertex b) { return Json::array({a, b}); }

}  // namespace detail

/// c(G) >= min{m+1, d_P(x)+d_P(y)} for a random maximal path x..y of length
/// m in a random 2-connected graph.
inline CheckReport falsify_posa(const FalsifyOptions& opt = {}) {
  return detail::run_samples("posa", opt, Json::object(), [&](std::int64_t, Rng& rng) {
    const std::int64_t n = detail::draw_order(rng, 4, opt.n_max);
    const Graph g = detail::draw_two_connected(rng, n);
    const PathWitness p = detail::random_maximal_path(g, rng);
    const std::int64_t bound = posa_bound(g, p);
    const auto c = static_cast<std::int64_t>(circumference(g));
    detail::SampleResult r;
    if (c < bound) {
      r.counterexample =
          Json{{"graph6", graph6_encode(g)}, {"path", p.vertices}, {"circumference", c}, {"bound", bound}};
    }
    return r;
  });
}

/// 2e(G) <= (r-3)(n-2) + 4n - 6 where r is the order of a longest path
/// between the ends of a random edge ab of a random 2-connected graph.
inline CheckReport falsify_fan(const FalsifyOptions& opt = {}) {
  return detail::run_samples("fan", opt, Json::object(), [&](std::int64_t, Rng& rng) {
    const std::int64_t n = detail::draw_order(rng, 4, opt.n_max);
    const Graph g = detail::draw_two_connected(rng, n);
    const auto [a, b] = rng.pick(g.edges());
    const auto r = static_cast<std::int64_t>(longest_path_between(g, a, b)->order());
    const std::int64_t doubled = 2 * g.edge_count();
    const std::int64_t bound = fan_bound_doubled(n, r);
    detail::SampleResult out;
    out.tag = doubled == bound ? "equality" : "";
    if (doubled > bound) {
      out.counterexample = Json{{"graph6", graph6_encode(g)},
                                {"edge", detail::edge_json(a, b)},
                                {"r", r},
                                {"doubled_edges", doubled},
                                {"doubled_bound", bound}};
    }
    return out;
  });
}

/// A 2-connected graph with more than max{h(n,k,floor(k/2)), h(n,k,2)}
/// edges has a cycle of length at least k. Samples sit just above the
/// threshold, where the statement is tight.
inline CheckReport falsify_kopylov(const FalsifyOptions& opt = {}) {
  return detail::run_samples("kopylov", opt, Json::object(), [&](std::int64_t, Rng& rng) {
    const std::int64_t n = detail::draw_order(rng, 5, opt.n_max);
    const std::int64_t k = rng.between(5, n);
    const std::int64_t threshold = kopylov_threshold(n, k);
    detail::SampleResult out;
    const std::int64_t room = choose2(n) - threshold;
    if (room <= 0) {
      out.in_hypothesis = false;
      return out;
    }
    const std::int64_t m = threshold + 1 + rng.between(0, std::min<std::int64_t>(room - 1, 3));
    const Graph g = random_two_connected(n, m, rng);
    const auto c = static_cast<std::int64_t>(circumference(g));
    if (c < k) {
      out.counterexample = Json{
          {"graph6", graph6_encode(g)}, {"k", k}, {"threshold", threshold}, {"circumference", c}};
    }
    return out;
  });
}

/// Which exceptional graph of the circumference / clique / minimum degree
/// bound g is isomorphic to, with q = omega + delta: "H" for H(n,q,delta),
/// "Z" for Z(n,q,delta), empty when neither exists or neither matches.
inline std::string recognize_exceptional(const Graph& g, std::int64_t omega, std::int64_t delta) {
  const auto n = static_cast<std::int64_t>(g.order());
  const std::int64_t q = omega + delta;
  if (delta >= 1 && 2 * delta <= q && q <= n && is_isomorphic(g, build_H(n, q, delta).graph)) return "H";
  if (z_block_count(n, q, delta) >= 2 && is_isomorphic(g, build_Z(n, q, delta).graph)) return "Z";
  return "";
}

/// c(G) >= min{n, omega+delta} for 2-connected G unless G is H(n,q,delta)
/// or Z(n,q,delta) with q = omega+delta. A quarter of the samples are
/// relabelled copies of H or Z so both recognisers are exercised.
inline CheckReport falsify_yuan(const FalsifyOptions& opt = {}) {
  return detail::run_samples("yuan", opt, Json::object(), [&](std::int64_t, Rng& rng) {
    Graph g;
    std::string planted;
    if (rng.chance(1, 4)) {
      if (rng.chance(1, 2)) {
        // H(n,k,a) with a >= 2 (2-connected) and 2a < k <= n
        const std::int64_t n = detail::draw_order(rng, 5, opt.n_max);
        const std::int64_t a = rng.between(2, (n - 1) / 2);
        const std::int64_t k = rng.between(2 * a + 1, n);
        g = random_relabel(build_H(n, k, a).graph, rng);
        planted = "H";
      } else {
        // Z(n,k,t) with k >= 2t+1, so omega = k-t and delta = t
        std::vector<std::array<std::int64_t, 3>> options;
        for (std::int64_t t = 2; 2 * t + 1 <= opt.n_max; ++t) {
          for (std::int64_t k = 2 * t + 1; k <= opt.n_max; ++k) {
            for (std::int64_t n = k; n <= opt.n_max; ++n) {
              if (z_block_count(n, k, t) >= 2) options.push_back({n, k, t});
            }
          }
        }
        if (options.empty()) return detail::SampleResult{false, std::nullopt, "no-planted-z"};
        const auto [n, k, t] = rng.pick(options);
        g = random_relabel(build_Z(n, k, t).graph, rng);
        planted = "Z";
      }
    } else {
      g = detail::draw_two_connected(rng, detail::draw_order(rng, 4, opt.n_max));
    }
    const auto n = static_cast<std::int64_t>(g.order());
    const std::int64_t omega = clique_number(g);
    const auto delta = static_cast<std::int64_t>(min_degree(g));
    const auto c = static_cast<std::int64_t>(circumference(g));
    detail::SampleResult out;
    if (c >= std::min(n, omega + delta)) {
      out.tag = planted.empty() ? "" : "planted-" + planted + "-not-needed";
      return out;
    }
    const std::string which = recognize_exceptional(g, omega, delta);
    if (which.empty()) {
      out.counterexample = Json{{"graph6", graph6_encode(g)},
                                {"omega", omega},
                                {"delta", delta},
                                {"circumference", c}};
    } else {
      out.tag = "exception-" + which;
    }
    return out;
  });
}

/// For k = 5: a 2-connected graph with more than
/// max{h(n,2k,k-1), h(n,2k+1,2)} edges contains a cycle of length at least
/// 2k+1, H_k(1), H_k(M_2) or H_k(P_3). Samples sit just above the
/// threshold: half are random dense 2-connected graphs, half are one of the
/// two threshold graphs H(n,2k,k-1), H(n,2k+1,2) with edges added.
inline CheckReport falsify_stability(const FalsifyOptions& opt = {}) {
  constexpr std::int64_t k = 5;
  return detail::run_samples("stability", opt, Json{{"k", k}}, [&](std::int64_t, Rng& rng) {
    detail::SampleResult out;
    if (opt.n_max < 2 * k + 1) {
      out.in_hypothesis = false;
      return out;
    }
    const std::int64_t n = detail::draw_order(rng, 2 * k + 1, opt.n_max);
    const std::int64_t threshold = stability_threshold(n, k);
    const std::int64_t room = choose2(n) - threshold;
    if (room <= 0) {
      out.in_hypothesis = false;
      return out;
    }
    const std::int64_t m = threshold + 1 + rng.between(0, std::min<std::int64_t>(room - 1, 3));
    Graph g;
    if (rng.chance(1, 2)) {
      // one of the two threshold graphs plus a few random edges
      g = rng.chance(1, 2) ? build_H(n, 2 * k, k - 1).graph : build_H(n, 2 * k + 1, 2).graph;
      fill_random_edges(g, std::max(m, g.edge_count() + 1), rng);
      g = random_relabel(g, rng);
    } else {
      g = random_two_connected(n, m, rng);
    }
    const FamilyVerdict v = contains_family_F(g, k);
    if (v == FamilyVerdict::kNone) {
      out.counterexample = Json{{"graph6", graph6_encode(g)}, {"k", k}, {"threshold", threshold}};
    } else {
      out.tag = verdict_name(v);
    }
    return out;
  });
}

namespace detail {

/// Maximal F-free graph grown from a spanning star at a random centre by
/// adding random non-edges that keep it F-free. Always connected.
inline Graph star_greedy(std::int64_t n, const PathForest& forest, Rng& rng) {
  SmallGraph g;
  g.n = static_cast<int>(n);
  const int centre = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  for (int v = 0; v < g.n; ++v) {
    if (v != centre) g.add_edge(centre, v);
  }
  std::vector<std::pair<int, int>> missing;
  for (int v = 1; v < g.n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (!g.adjacent(u, v)) missing.emplace_back(u, v);
    }
  }
  rng.shuffle(missing);
  for (const auto& [u, v] : missing) {
    g.add_edge(u, v);
    ForestHost host(g);
    if (host.anchored(u, v, g.vertices(), forest.orders(), nullptr)) g.remove_edge(u, v);
  }
  return g.to_graph();
}

}  // namespace detail

/// Connected F-free graphs for F = P_{2k1+1} u P_{2k2+1}, (k1,k2) in
/// {(2,2), (3,2)}, n >= 2k1+2k2+2, have at most
/// max{h(n,2k1+2k2+1,1), h(n,2k1+2k2,k1+k2-1)} edges. Graphs come from
/// star-seeded greedy growth and, for every eighth sample, from the local
/// search (disconnected outputs are vacuous).
inline CheckReport falsify_connected_bound(const FalsifyOptions& opt = {}) {
  static constexpr std::array<std::array<std::int64_t, 2>, 2> kPairs{{{2, 2}, {3, 2}}};
  return detail::run_samples(
      "connected-bound", opt, Json{{"pairs", Json::array({"2,2", "3,2"})}}, [&](std::int64_t index, Rng& rng) {
        detail::SampleResult out;
        std::vector<std::array<std::int64_t, 2>> usable;
        for (const auto& p : kPairs) {
          if (2 * p[0] + 2 * p[1] + 2 <= opt.n_max) usable.push_back(p);
        }
        if (usable.empty()) {
          out.in_hypothesis = false;
          return out;
        }
        const auto [k1, k2] = rng.pick(usable);
        const std::int64_t n = detail::draw_order(rng, 2 * k1 + 2 * k2 + 2, opt.n_max);
        const PathForest forest{static_cast<int>(2 * k1 + 1), static_cast<int>(2 * k2 + 1)};
        Graph g;
        if (index % 8 == 0) {
          LocalSearchBudget budget;
          budget.iterations = 3000;
          budget.seed = rng.next();
          g = local_search_max(static_cast<int>(n), forest, budget).witness;
          out.tag = "local-search";
        } else {
          g = detail::star_greedy(n, forest, rng);
          out.tag = "star-greedy";
        }
        require(!contains_forest(g, forest).found, "connected-bound: generator produced a graph containing F");
        if (!is_connected(g)) {
          out.in_hypothesis = false;
          return out;
        }
        const std::int64_t bound = f_conn(n, k1, k2);
        if (g.edge_count() > bound) {
          out.counterexample = Json{{"graph6", graph6_encode(g)},
                                    {"forest", forest.to_string()},
                                    {"edges", g.edge_count()},
                                    {"bound", bound}};
        }
        return out;
      });
}

/// Runs a suite by name. Throws UsageError for unknown names and
/// CapabilityError when n_max is above the exact-engine cap.
inline CheckReport falsify(const std::string& suite, const FalsifyOptions& opt = {}) {
  require(opt.samples >= 0, "falsify: samples must be non-negative");
  require(opt.workers >= 1, "falsify: workers must be positive");
  require(opt.n_max >= 5, "falsify: n_max must be at least 5");
  require_capability(opt.n_max <= kFalsifyOrderCap, "falsify: n_max exceeds the order cap of 16");
  if (suite == "posa") return falsify_posa(opt);
  if (suite == "fan") return falsify_fan(opt);
  if (suite == "kopylov") return falsify_kopylov(opt);
  if (suite == "yuan") return falsify_yuan(opt);
  if (suite == "stability") return falsify_stability(opt);
  if (suite == "connected-bound") return falsify_connected_bound(opt);
  throw UsageError("unknown falsify suite: " + suite);
}

}  // namespace pathturan
