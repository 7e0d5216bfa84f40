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

// Exhaustive ground truth for Turan numbers of path forests.
//
// brute_ex enumerates every labelled graph on n <= 7 vertices, level by level
// from the complete graph down, and stops at the first edge count that has
// an F-free graph.
//
// verify_upper_at certifies "every n-vertex graph with more than E edges
// contains F". Containing F is monotone under adding edges, so it suffices
// to look at graphs with exactly E+1 edges, i.e. at complements with exactly
// D = C(n,2) - E - 1 edges. Such a graph is F-free iff its removed edge set
// hits every copy of F in K_n, which we decide with a bounded hitting-set
// search: find a copy in the current graph, branch on which of its edges to
// remove, and mark the edges of earlier branches as kept so that every
// removal set is explored at most once.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <thread>
#include <vector>

#include "pathturan/canonical.hpp"
#include "pathturan/checked.hpp"
#include "pathturan/errors.hpp"
#include "pathturan/forest.hpp"
#include "pathturan/io.hpp"
#include "pathturan/path_forest.hpp"
#include "pathturan/report.hpp"
#include "pathturan/small_graph.hpp"

namespace pathturan {

inline constexpr int kBruteCap = 7;
inline constexpr int kVerifyCap = 11;  // C(11,2) = 55 edge slots fit one word
inline constexpr std::int64_t kVerifyCandidateGuard = std::int64_t{1} << 31;

namespace detail {

/// Pair slots in graph6 order: (0,1), (0,2), (1,2), (0,3), ...
struct EdgeSlots {
  std::vector<std::pair<int, int>> pairs;
  std::array<std::array<int, 64>, 64> index{};

  explicit EdgeSlots(int n) {
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        index[i][j] = index[j][i] = static_cast<int>(pairs.size());
        pairs.emplace_back(i, j);
      }
    }
  }

  SmallGraph graph(int n, Mask present) const {
    SmallGraph g;
    g.n = n;
    for (Mask m = present; m; m &= m - 1) {
      const auto [u, v] = pairs[static_cast<std::size_t>(lowest(m))];
      g.add_edge(u, v);
    }
    return g;
  }

  Mask path_edges(const Sequences& seqs) const {
    Mask m = 0;
    for (const auto& s : seqs) {
      for (std::size_t i = 1; i < s.size(); ++i) m |= bit_of(index[s[i - 1]][s[i]]);
    }
    return m;
  }
};

inline void check_forest_total(const PathForest& f, const char* engine) {
  if (f.total_order() > kForestTotalCap) {
    throw CapabilityError(std::string(engine) + ": forest order exceeds the exact-search cap of " +
                          std::to_string(kForestTotalCap));
  }
}

}  // namespace detail

struct BruteResult {
  std::int64_t ex = 0;
  /// All extremal graphs up to isomorphism, ordered by canonical code.
  std::vector<Graph> extremal;
  std::int64_t graphs_checked = 0;
};

/// ex(n, F) by full labelled enumeration. Cap: n <= 7.
inline BruteResult brute_ex(int n, const PathForest& forest) {
  require(n >= 0, "brute_ex needs n >= 0");
  require_capability(n <= kBruteCap, "brute_ex: n exceeds the enumeration cap of 7");
  detail::check_forest_total(forest, "brute_ex");
  const detail::EdgeSlots slots(n);
  const int total = static_cast<int>(slots.pairs.size());
  BruteResult out;
  for (int level = total; level >= 0; --level) {
    std::map<CanonicalCode, Graph> found;
    const Mask limit = bit_of(total);
    // Gosper's hack over all masks with `level` bits
    Mask m = low_bits(level);
    while (m < limit || (level == 0 && m == 0)) {
      ++out.graphs_checked;
      const SmallGraph g = slots.graph(n, m);
      detail::ForestHost host(g);
      if (!host.hosts(g.vertices(), forest.orders(), nullptr)) {
        Graph full = g.to_graph();
        found.emplace(canonical_code(full), std::move(full));
      }
      if (m == 0) break;
      const Mask c = m & (~m + 1);
      const Mask r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
    if (!found.empty()) {
      out.ex = level;
      for (auto& [code, g] : found) out.extremal.push_back(std::move(g));
      return out;
    }
  }
  return out;
}

struct VerifyOptions {
  int workers = 1;
};

namespace detail {

class HittingSearch {
 public:
  HittingSearch(int n, const PathForest& forest, int budget)
      : n_(n), forest_(forest), slots_(n), budget_(budget) {
    all_ = low_bits(static_cast<int>(slots_.pairs.size()));
  }

  /// Witness edge mask for K_n minus `removed`, or 0 when it is F-free.
  Mask witness(Mask removed) {
    ++nodes_;
    const SmallGraph g = slots_.graph(n_, all_ & ~removed);
    ForestHost host(g);
    Sequences seqs;
    if (!host.hosts(g.vertices(), forest_.orders(), &seqs)) return 0;
    return slots_.path_edges(seqs);
  }

  /// Searches removal sets extending `removed` by at most `left` edges,
  /// never touching `kept`. Returns a removal set leaving K_n F-free.
  std::optional<Mask> search(Mask removed, Mask kept, int left) {
    const Mask w = witness(removed);
    if (w == 0) return removed;
    if (left == 0) return std::nullopt;
    Mask branch = w & ~kept;
    for (; branch; branch &= branch - 1) {
      const Mask e = branch & (~branch + 1);
      if (auto hit = search(removed | e, kept, left - 1)) return hit;
      kept |= e;
    }
    return std::nullopt;
  }

  /// Top-level branches are independent once their kept sets are fixed.
  std::vector<std::pair<Mask, Mask>> root_branches(Mask w) const {
    std::vector<std::pair<Mask, Mask>> out;
    Mask kept = 0;
    for (Mask b = w; b; b &= b - 1) {
      const Mask e = b & (~b + 1);
      out.emplace_back(e, kept);
      kept |= e;
    }
    return out;
  }

  /// Pads a removal set with the lowest free slots up to the budget.
  Mask pad(Mask removed) const {
    for (int i = 0; count(removed) < budget_ && i < static_cast<int>(slots_.pairs.size()); ++i) {
      removed |= bit_of(i);
    }
    return removed;
  }

  Graph graph_without(Mask removed) const { return slots_.graph(n_, all_ & ~removed).to_graph(); }
  std::int64_t nodes() const { return nodes_; }

 private:
  int n_;
  const PathForest& forest_;
  EdgeSlots slots_;
  int budget_;
  Mask all_ = 0;
  std::int64_t nodes_ = 0;
};

}  // namespace detail

/// Certifies that every graph on n vertices with at least E+1 edges contains
/// F. Pass, violated (with an F-free (E+1)-edge graph as certificate), or
/// capability-skipped when C(C(n,2), D) exceeds 2^31 candidates.
inline CheckReport verify_upper_at(int n, const PathForest& forest, std::int64_t e,
                                   const VerifyOptions& options = {}) {
  CheckReport rep;
  rep.suite = "verify-upper";
  rep.params = Json{{"n", n}, {"forest", forest.to_string()}, {"E", e}};
  require(n >= 1 && e >= 0, "verify_upper_at needs n >= 1 and E >= 0");
  detail::check_forest_total(forest, "verify_upper_at");
  if (n > kVerifyCap) {
    rep.skip("order " + std::to_string(n) + " exceeds the complement enumeration cap of " +
             std::to_string(kVerifyCap));
    return rep;
  }
  const std::int64_t slots = choose2(n);
  const std::int64_t budget = slots - e - 1;
  rep.details["complement_edges"] = budget;
  if (budget < 0) {
    rep.notes.push_back("no graph on n vertices has more than E edges");
    return rep;
  }
  const std::int64_t candidates = binomial(slots, budget);
  rep.details["candidates"] = candidates;
  if (candidates > kVerifyCandidateGuard) {
    rep.skip("candidate count " + std::to_string(candidates) + " exceeds the 2^31 guard");
    return rep;
  }
  const int d = static_cast<int>(budget);
  detail::HittingSearch root(n, forest, d);
  std::optional<Mask> hit;
  const Mask w = root.witness(0);
  std::int64_t nodes = root.nodes();
  if (w == 0) {
    hit = Mask{0};
  } else if (d > 0) {
    const auto branches = root.root_branches(w);
    std::vector<std::optional<Mask>> results(branches.size());
    std::vector<std::int64_t> counts(branches.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < branches.size(); i = next++) {
        detail::HittingSearch local(n, forest, d);
        results[i] = local.search(branches[i].first, branches[i].second, d - 1);
        counts[i] = local.nodes();
      }
    };
    const int threads = std::max(1, std::min<int>(options.workers, static_cast<int>(branches.size())));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < branches.size(); ++i) {
      nodes += counts[i];
      if (!hit && results[i]) hit = results[i];
    }
  }
  rep.samples = nodes;
  if (hit) {
    const Graph g = root.graph_without(root.pad(*hit));
    rep.violate(Json{{"graph6", graph6_encode(g)}, {"edges", g.edge_count()}});
  }
  return rep;
}

/// Re-checks a verify-upper counterexample from its graph6 alone.
inline bool recheck_upper_counterexample(const Json& certificate, const PathForest& forest, std::int64_t e) {
  const Graph g = graph6_decode(certificate.at("graph6").get<std::string>());
  return g.edge_count() > e && !contains_forest(g, forest).found;
}

}  // namespace pathturan
