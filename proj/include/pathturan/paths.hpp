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

// Exact path and cycle searches. Every search is exhaustive backtracking over
// 64-bit vertex masks with two prunings: a reachability bound (the current
// end cannot reach enough unused vertices) and twin reduction (interchangeable
// vertices are tried once). Past the documented caps the engines throw
// CapabilityError rather than answer.

#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "pathturan/errors.hpp"
#include "pathturan/graph.hpp"
#include "pathturan/small_graph.hpp"

namespace pathturan {

inline constexpr std::size_t kPathSearchCap = 32;
inline constexpr std::size_t kHamiltonCap = 24;

struct PathWitness {
  enum class Kind { kPath, kCycle };
  Kind kind = Kind::kPath;
  std::vector<Vertex> vertices;

  std::size_t order() const { return vertices.size(); }
  bool operator==(const PathWitness&) const = default;
};

/// True iff consecutive vertices are adjacent, vertices are distinct and (for
/// a cycle) the last vertex closes back to the first.
inline bool is_valid_witness(const Graph& g, const PathWitness& w) {
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : w.vertices) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.order() || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 1; i < w.vertices.size(); ++i) {
    if (!g.adjacent(w.vertices[i - 1], w.vertices[i])) return false;
  }
  if (w.kind == PathWitness::Kind::kCycle) {
    if (w.vertices.size() < 3 || !g.adjacent(w.vertices.front(), w.vertices.back())) return false;
  }
  return true;
}

namespace detail {

// Branch and bound for the longest path; `best` holds the best order seen.
class LongestPathSearch {
 public:
  explicit LongestPathSearch(const SmallGraph& g)
      : g_(g), twins_(TwinClasses::compute(g, g.vertices())) {}

  int optimum() {
    const Mask all = g_.vertices();
    int upper = 0;
    for_each_component(g_, all, [&](Mask c) { upper = std::max(upper, count(c)); });
    upper_ = upper;
    best_ = g_.n > 0 ? 1 : 0;
    for (Mask s = twins_.reduce(all, all); s && best_ < upper_; s &= s - 1) {
      const int v = lowest(s);
      dfs(v, 1, all & ~bit_of(v));
    }
    return best_;
  }

  /// Lexicographically first path on exactly `order` vertices.
  std::vector<Vertex> lex_first(int order) {
    target_ = order;
    const Mask all = g_.vertices();
    for (Mask s = twins_.reduce(all, all); s; s &= s - 1) {
      const int v = lowest(s);
      seq_.assign(1, v);
      if (exact(v, 1, all & ~bit_of(v))) return seq_;
    }
    return {};
  }

 private:
  void dfs(int end, int len, Mask unused) {
    if (len > best_) best_ = len;
    if (best_ >= upper_) return;
    const Mask r = reach(g_, end, unused);
    if (len + count(r) - 1 <= best_) return;
    for (Mask c = twins_.reduce(g_.adj[end] & unused, unused); c; c &= c - 1) {
      const int w = lowest(c);
      dfs(w, len + 1, unused & ~bit_of(w));
      if (best_ >= upper_) return;
    }
  }

  bool exact(int end, int len, Mask unused) {
    if (len == target_) return true;
    if (len + count(reach(g_, end, unused)) - 1 < target_) return false;
    for (Mask c = twins_.reduce(g_.adj[end] & unused, unused); c; c &= c - 1) {
      const int w = lowest(c);
      seq_.push_back(w);
      if (exact(w, len + 1, unused & ~bit_of(w))) return true;
      seq_.pop_back();
    }
    return false;
  }

  const SmallGraph& g_;
  TwinClasses twins_;
  int best_ = 0;
  int upper_ = 0;
  int target_ = 0;
  std::vector<Vertex> seq_;
};

// Paths from x to y. `exact_order` > 0 asks for exactly that many vertices;
// otherwise the search maximises.
class BetweenSearch {
 public:
  BetweenSearch(const SmallGraph& g, int x, int y, Mask allowed)
      : g_(g), x_(x), y_(y), allowed_(allowed | bit_of(x) | bit_of(y)),
        twins_(TwinClasses::compute(g, allowed_, bit_of(x) | bit_of(y))) {}

  bool find_exact(int order) {
    target_ = order;
    seq_.assign(1, x_);
    if (order < 2) return false;
    return exact(x_, 1, allowed_ & ~bit_of(x_) & ~bit_of(y_));
  }

  int longest() {
    best_ = 0;
    const Mask unused = allowed_ & ~bit_of(x_) & ~bit_of(y_);
    upper_ = count(reach(g_, x_, allowed_ & ~bit_of(x_)));
    seq_.assign(1, x_);
    maximise(x_, 1, unused);
    return best_;
  }

  std::vector<Vertex> path() const { return best_seq_; }
  std::vector<Vertex> exact_path() const {
    auto out = seq_;
    out.push_back(y_);
    return out;
  }

 private:
  bool exact(int end, int len, Mask unused) {
    // len vertices placed; y still to come.
    if (len == target_ - 1) return g_.adjacent(end, y_);
    const Mask r = reach(g_, end, unused | bit_of(y_));
    if (!(r & bit_of(y_))) return false;
    if (len + count(r & unused) + 1 < target_) return false;
    for (Mask c = twins_.reduce(g_.adj[end] & unused, unused); c; c &= c - 1) {
      const int w = lowest(c);
      seq_.push_back(w);
      if (exact(w, len + 1, unused & ~bit_of(w))) return true;
      seq_.pop_back();
    }
    return false;
  }

  void maximise(int end, int len, Mask unused) {
    if (g_.adjacent(end, y_) && len + 1 > best_) {
      best_ = len + 1;
      best_seq_ = seq_;
      best_seq_.push_back(y_);
    }
    if (best_ >= upper_) return;
    const Mask r = reach(g_, end, unused | bit_of(y_));
    if (!(r & bit_of(y_))) return;
    if (len + count(r & unused) + 1 <= best_) return;
    for (Mask c = twins_.reduce(g_.adj[end] & unused, unused); c; c &= c - 1) {
      const int w = lowest(c);
      seq_.push_back(w);
      maximise(w, len + 1, unused & ~bit_of(w));
      seq_.pop_back();
      if (best_ >= upper_) return;
    }
  }

  const SmallGraph& g_;
  int x_, y_;
  Mask allowed_;
  TwinClasses twins_;
  int target_ = 0;
  int best_ = 0;
  int upper_ = 0;
  std::vector<Vertex> seq_;
  std::vector<Vertex> best_seq_;
};

// Longest cycle. Cycles are rooted at their smallest vertex.
class CycleSearch {
 public:
  explicit CycleSearch(const SmallGraph& g) : g_(g) {}

  int longest(int stop_at = 0) {
    best_ = 0;
    stop_at_ = stop_at > 0 ? stop_at : g_.n;
    for (int s = 0; s < g_.n && g_.n - s > best_ && best_ < stop_at_; ++s) {
      root_ = s;
      const Mask allowed = g_.vertices() & ~low_bits(s + 1);
      twins_ = TwinClasses::compute(g_, allowed | bit_of(s), bit_of(s));
      seq_.assign(1, s);
      dfs(s, 1, allowed);
    }
    return best_;
  }

  std::vector<Vertex> cycle() const { return best_seq_; }

 private:
  void dfs(int end, int len, Mask unused) {
    if (len >= 3 && g_.adjacent(end, root_) && len > best_) {
      best_ = len;
      best_seq_ = seq_;
    }
    if (best_ >= stop_at_) return;
    const Mask r = reach(g_, end, unused);
    if (len + count(r) - 1 <= best_) return;
    for (Mask c = twins_.reduce(g_.adj[end] & unused, unused); c; c &= c - 1) {
      const int w = lowest(c);
      seq_.push_back(w);
      dfs(w, len + 1, unused & ~bit_of(w));
      seq_.pop_back();
      if (best_ >= stop_at_) return;
    }
  }

  const SmallGraph& g_;
  TwinClasses twins_;
  int root_ = 0;
  int best_ = 0;
  int stop_at_ = 0;
  std::vector<Vertex> seq_;
  std::vector<Vertex> best_seq_;
};

class HamiltonSearch {
 public:
  explicit HamiltonSearch(const SmallGraph& g)
      : g_(g), twins_(TwinClasses::compute(g, g.vertices(), bit_of(0))) {}

  bool run() {
    if (g_.n < 3) return false;
    for (int v = 0; v < g_.n; ++v) {
      if (count(g_.adj[v]) < 2) return false;
    }
    seq_.assign(1, 0);
    return dfs(0, g_.vertices() & ~Mask{1});
  }

  std::vector<Vertex> cycle() const { return seq_; }

 private:
  bool dfs(int end, Mask unused) {
    if (!unused) return g_.adjacent(end, 0);
    if ((reach(g_, end, unused) & unused) != unused) return false;
    // each unused vertex still needs two usable neighbours
    const Mask usable_extra = bit_of(end) | Mask{1};
    for (Mask m = unused; m; m &= m - 1) {
      const int v = lowest(m);
      if (count(g_.adj[v] & (unused | usable_extra)) < 2) return false;
    }
    for (Mask c = twins_.reduce(g_.adj[end] & unused, unused); c; c &= c - 1) {
      const int w = lowest(c);
      seq_.push_back(w);
      if (dfs(w, unused & ~bit_of(w))) return true;
      seq_.pop_back();
    }
    return false;
  }

  const SmallGraph& g_;
  TwinClasses twins_;
  std::vector<Vertex> seq_;
};

}  // namespace detail

struct LongestPath {
  std::size_t order = 0;
  PathWitness witness;
};

/// Longest path (vertex count) with the lexicographically smallest optimal
/// vertex sequence as witness. Cap: order <= 32.
inline LongestPath longest_path(const Graph& g) {
  const auto sg = SmallGraph::from(g, kPathSearchCap, "longest_path");
  detail::LongestPathSearch search(sg);
  const int opt = search.optimum();
  LongestPath out;
  out.order = static_cast<std::size_t>(opt);
  if (opt > 0) out.witness.vertices = search.lex_first(opt);
  return out;
}

/// Longest x-y path, or nullopt when x and y are in different components.
inline std::optional<PathWitness> longest_path_between(const Graph& g, Vertex x, Vertex y) {
  const auto sg = SmallGraph::from(g, kPathSearchCap, "longest_path_between");
  require(x >= 0 && x < sg.n && y >= 0 && y < sg.n && x != y, "longest_path_between: bad endpoints");
  detail::BetweenSearch search(sg, x, y, sg.vertices());
  if (search.longest() == 0) return std::nullopt;
  return PathWitness{PathWitness::Kind::kPath, search.path()};
}

/// An x-y path on exactly `order` vertices, if one exists.
inline std::optional<PathWitness> path_of_order_between(const Graph& g, Vertex x, Vertex y,
                                                        std::size_t order) {
  const auto sg = SmallGraph::from(g, kPathSearchCap, "path_of_order_between");
  require(x >= 0 && x < sg.n && y >= 0 && y < sg.n && x != y, "path_of_order_between: bad endpoints");
  if (order < 2 || order > static_cast<std::size_t>(sg.n)) return std::nullopt;
  detail::BetweenSearch search(sg, x, y, sg.vertices());
  if (!search.find_exact(static_cast<int>(order))) return std::nullopt;
  return PathWitness{PathWitness::Kind::kPath, search.exact_path()};
}

/// Order of a longest cycle; 0 for forests. Cap: order <= 32.
inline std::size_t circumference(const Graph& g) {
  const auto sg = SmallGraph::from(g, kPathSearchCap, "circumference");
  return static_cast<std::size_t>(detail::CycleSearch(sg).longest());
}

inline std::optional<PathWitness> longest_cycle(const Graph& g) {
  const auto sg = SmallGraph::from(g, kPathSearchCap, "longest_cycle");
  detail::CycleSearch search(sg);
  if (search.longest() == 0) return std::nullopt;
  return PathWitness{PathWitness::Kind::kCycle, search.cycle()};
}

/// True iff G has a cycle on at least `length` vertices (stops early).
inline bool has_cycle_at_least(const Graph& g, std::size_t length) {
  const auto sg = SmallGraph::from(g, kPathSearchCap, "has_cycle_at_least");
  if (length > static_cast<std::size_t>(sg.n)) return false;
  return detail::CycleSearch(sg).longest(static_cast<int>(length)) >= static_cast<int>(length);
}

/// Cap: order <= 24.
inline bool is_hamiltonian(const Graph& g) {
  const auto sg = SmallGraph::from(g, kHamiltonCap, "is_hamiltonian");
  return detail::HamiltonSearch(sg).run();
}

inline std::optional<PathWitness> hamilton_cycle(const Graph& g) {
  const auto sg = SmallGraph::from(g, kHamiltonCap, "hamilton_cycle");
  detail::HamiltonSearch search(sg);
  if (!search.run()) return std::nullopt;
  return PathWitness{PathWitness::Kind::kCycle, search.cycle()};
}

/// Whether edge uv lies on a cycle with exactly `length` vertices.
inline bool edge_in_cycle_of_length(const Graph& g, Vertex u, Vertex v, std::size_t length) {
  require(g.adjacent(u, v), "edge_in_cycle_of_length: not an edge");
  if (length < 3) return false;
  Graph h = g;
  h.remove_edge(u, v);
  return path_of_order_between(h, u, v, length).has_value();
}

/// min{m + 1, d_P(x) + d_P(y)} for the path P = x..y of length m (edges),
/// where d_P counts neighbours lying on P.
inline std::int64_t posa_bound(const Graph& g, const PathWitness& path) {
  require(path.kind == PathWitness::Kind::kPath && !path.vertices.empty() && is_valid_witness(g, path),
          "posa_bound: witness is not a path of the graph");
  const auto m = static_cast<std::int64_t>(path.vertices.size()) - 1;
  auto on_path_degree = [&](Vertex x) {
    std::int64_t d = 0;
    for (Vertex v : path.vertices) {
      if (v != x && g.adjacent(x, v)) ++d;
    }
    return d;
  };
  return std::min<std::int64_t>(m + 1, on_path_degree(path.vertices.front()) +
                                           on_path_degree(path.vertices.back()));
}

struct Disintegration {
  VertexSet remaining;
  std::vector<Vertex> deleted;  // deletion order
};

/// Repeatedly deletes a vertex of current degree <= alpha until none is left.
/// The default schedule deletes the smallest eligible index; `pick` may
/// choose among the eligible vertices instead (the fixpoint is the same).
template <typename Pick>
Disintegration alpha_disintegration(const Graph& g, std::int64_t alpha, Pick&& pick) {
  const std::size_t n = g.order();
  std::vector<std::int64_t> deg(n);
  std::vector<char> alive(n, 1);
  for (std::size_t v = 0; v < n; ++v) deg[v] = static_cast<std::int64_t>(g.degree(static_cast<Vertex>(v)));
  Disintegration out{VertexSet::full(n), {}};
  std::vector<Vertex> eligible;
  while (true) {
    eligible.clear();
    for (std::size_t v = 0; v < n; ++v) {
      if (alive[v] && deg[v] <= alpha) eligible.push_back(static_cast<Vertex>(v));
    }
    if (eligible.empty()) break;
    const Vertex v = pick(std::span<const Vertex>(eligible));
    alive[v] = 0;
    out.remaining.erase(v);
    out.deleted.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (alive[w]) --deg[w];
    }
  }
  return out;
}

inline Disintegration alpha_disintegration(const Graph& g, std::int64_t alpha) {
  return alpha_disintegration(g, alpha, [](std::span<const Vertex> e) { return e.front(); });
}

}  // namespace pathturan
