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

// Walks ex(n, P_k1 u P_k2) over a range of n and cross-examines every point:
// the witness must attain the value and be forest-free, the local search
// must not beat it, and where the complement budget is small the exact
// upper verification runs too. Branch changes are listed as transitions.

#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "pathturan/constructions.hpp"
#include "pathturan/exhaustive.hpp"
#include "pathturan/forest.hpp"
#include "pathturan/formulas.hpp"
#include "pathturan/io.hpp"
#include "pathturan/local_search.hpp"
#include "pathturan/report.hpp"
#include "pathturan/rng.hpp"

namespace pathturan {

struct CrossoverOptions {
  /// Local-search iterations per point; 0 disables the search.
  std::int64_t local_search_iterations = 0;
  std::uint64_t seed = 42;
  int workers = 1;
  /// Also run verify_upper_at where the candidate guard allows it.
  bool verify_upper = false;
};

namespace detail {

struct CrossoverRow {
  Json row;
  std::optional<Json> counterexample;
};

inline CrossoverRow crossover_point(std::int64_t n, std::int64_t k1, std::int64_t k2, const CrossoverOptions& opt) {
  const PathForest forest{static_cast<int>(k1), static_cast<int>(k2)};
  const ExtremalResult r = two_paths_value(n, k1, k2);
  const Graph witness = rebuild(r.witness).graph;
  CrossoverRow out;
  out.row = Json{{"n", n},
                 {"value", r.value},
                 {"branch", branch_name(r.branch)},
                 {"branch_values", r.branch_values},
                 {"witness", r.witness.describe()},
                 {"witness_edges", witness.edge_count()}};
  auto fail = [&](const char* what, const Graph& g) {
    if (!out.counterexample) {
      out.counterexample = Json{{"n", n}, {"check", what}, {"graph6", graph6_encode(g)}, {"edges", g.edge_count()}};
    }
  };
  if (witness.edge_count() != r.value) fail("witness-edges", witness);
  if (n <= static_cast<std::int64_t>(kForestHostCap)) {
    const bool free = !contains_forest(witness, forest).found;
    out.row["witness_forest_free"] = free;
    if (!free) fail("witness-forest-free", witness);
  }
  if (opt.local_search_iterations > 0 && n <= static_cast<std::int64_t>(kForestHostCap)) {
    LocalSearchBudget budget;
    budget.iterations = opt.local_search_iterations;
    budget.seed = substream_seed(opt.seed, static_cast<std::uint64_t>(n));
    const LocalSearchResult ls = local_search_max(static_cast<int>(n), forest, budget);
    out.row["local_search"] = ls.best;
    if (ls.best > r.value) fail("local-search-exceeds-value", ls.witness);
  }
  if (opt.verify_upper && n <= kVerifyCap) {
    const CheckReport v = verify_upper_at(static_cast<int>(n), forest, r.value);
    out.row["verify_upper"] = verdict_name(v.verdict);
    if (v.verdict == Verdict::kViolated && !out.counterexample) {
      out.counterexample = Json{{"n", n}, {"check", "verify-upper"}};
      out.counterexample->update(*v.counterexample);
    }
  }
  return out;
}

}  // namespace detail

/// Cross-examines two_paths_value over n in [n_lo, n_hi]. details.points
/// has one row per n; details.transitions lists each n where the
/// attaining branch differs from n-1.
inline CheckReport crossover(std::int64_t n_lo, std::int64_t n_hi, std::int64_t k1, std::int64_t k2,
                             const CrossoverOptions& opt = {}) {
  check_two_paths(k1, k2);
  require(0 <= n_lo && n_lo <= n_hi, "crossover needs 0 <= n_lo <= n_hi");
  require(opt.workers >= 1 && opt.local_search_iterations >= 0, "crossover: bad options");
  CheckReport rep;
  rep.suite = "crossover";
  rep.params = Json{{"forest", std::to_string(k1) + "," + std::to_string(k2)}, {"n_lo", n_lo}, {"n_hi", n_hi}};
  if (opt.local_search_iterations > 0) {
    rep.params["local_search_iterations"] = opt.local_search_iterations;
    rep.params["seed"] = opt.seed;
  }

  const auto count = static_cast<std::size_t>(n_hi - n_lo + 1);
  std::vector<detail::CrossoverRow> rows(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      rows[i] = detail::crossover_point(n_lo + static_cast<std::int64_t>(i), k1, k2, opt);
    }
  };
  const int threads = std::max(1, std::min<int>(opt.workers, static_cast<int>(count)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Json points = Json::array();
  Json transitions = Json::array();
  for (std::size_t i = 0; i < count; ++i) {
    ++rep.samples;
    if (rows[i].counterexample) rep.violate(*rows[i].counterexample);
    if (i > 0 && rows[i].row["branch"] != rows[i - 1].row["branch"]) {
      transitions.push_back(Json{{"from", rows[i - 1].row["n"]},
                                 {"to", rows[i].row["n"]},
                                 {"from_branch", rows[i - 1].row["branch"]},
                                 {"to_branch", rows[i].row["branch"]},
                                 {"from_value", rows[i - 1].row["value"]},
                                 {"to_value", rows[i].row["value"]}});
    }
  }
  for (auto& r : rows) points.push_back(std::move(r.row));
  rep.details["transitions"] = std::move(transitions);
  rep.details["points"] = std::move(points);
  return rep;
}

}  // namespace pathturan
