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

// Exact containment of vertex-disjoint path forests.
//
// The host is split into connected components; a component that is a clique
// hosts a set of paths iff their orders sum to at most its size, any other
// component is searched exhaustively. A small dynamic program over "how many
// paths of each order are already placed" combines the components.

#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <unordered_map>
#include <vector>

#include "pathturan/errors.hpp"
#include "pathturan/graph.hpp"
#include "pathturan/path_forest.hpp"
#include "pathturan/paths.hpp"
#include "pathturan/small_graph.hpp"

namespace pathturan {

inline constexpr std::size_t kForestHostCap = 32;
inline constexpr int kForestTotalCap = 24;

struct ForestMatch {
  bool found = false;
  /// One path per forest member, in the forest's (non-increasing) order.
  std::vector<PathWitness> paths;
};

namespace detail {

using Sequences = std::vector<std::vector<int>>;

// Places paths of the given orders, one after another, inside `allowed`.
class ForestPlacement {
 public:
  ForestPlacement(const SmallGraph& g, Mask allowed, std::span<const int> orders)
      : g_(g), orders_(orders.begin(), orders.end()), twins_(TwinClasses::compute(g, allowed)) {
    suffix_.assign(orders_.size() + 1, 0);
    for (std::size_t i = orders_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + orders_[i];
    allowed_ = allowed;
  }

  bool run() {
    seqs_.assign(orders_.size(), {});
    return place(0, allowed_);
  }

  const Sequences& sequences() const { return seqs_; }

 private:
  bool place(std::size_t idx, Mask unused) {
    if (idx == orders_.size()) return true;
    if (count(unused) < suffix_[idx]) return false;
    for (Mask s = twins_.reduce(unused, unused); s; s &= s - 1) {
      const int v = lowest(s);
      seqs_[idx].assign(1, v);
      if (extend(idx, v, 1, unused & ~bit_of(v))) return true;
    }
    seqs_[idx].clear();
    return false;
  }

  bool extend(std::size_t idx, int end, int len, Mask unused) {
    const int need = orders_[idx];
    if (len == need) return place(idx + 1, unused);
    if (need - len >= 2 && count(reach(g_, end, unused)) - 1 < need - len) return false;
    for (Mask c = twins_.reduce(g_.adj[end] & unused, unused); c; c &= c - 1) {
      const int w = lowest(c);
      seqs_[idx].push_back(w);
      if (extend(idx, w, len + 1, unused & ~bit_of(w))) return true;
      seqs_[idx].pop_back();
    }
    return false;
  }

  const SmallGraph& g_;
  std::vector<int> orders_;
  std::vector<int> suffix_;
  Mask allowed_ = 0;
  TwinClasses twins_;
  Sequences seqs_;
};

// Decides whether G[allowed] hosts a forest, combining components.
class ForestHost {
 public:
  explicit ForestHost(const SmallGraph& g) : g_(g) {}

  /// `orders` non-increasing. On success, `out` gets one sequence per order.
  bool hosts(Mask allowed, std::span<const int> orders, Sequences* out) {
    if (orders.empty()) {
      if (out) out->clear();
      return true;
    }
    int total = 0;
    for (int k : orders) total += k;
    if (total > count(allowed)) return false;
    const int smallest = orders.back();

    std::vector<Mask> comps;
    for_each_component(g_, allowed, [&](Mask c) {
      if (count(c) >= smallest) comps.push_back(c);
    });
    if (comps.empty()) return false;
    if (comps.size() == 1) return component_hosts(comps[0], orders, out);
    if (orders.size() == 1) {
      for (Mask c : comps) {
        if (count(c) >= orders[0] && component_hosts(c, orders, out)) return true;
      }
      return false;
    }
    return combine(comps, orders, out);
  }

 private:
  bool component_hosts(Mask comp, std::span<const int> orders, Sequences* out) {
    int total = 0;
    for (int k : orders) total += k;
    if (total > count(comp)) return false;
    if (is_clique(g_, comp)) {
      if (out) {
        out->clear();
        Mask m = comp;
        for (int k : orders) {
          std::vector<int> seq;
          for (int j = 0; j < k; ++j) {
            seq.push_back(lowest(m));
            m &= m - 1;
          }
          out->push_back(std::move(seq));
        }
      }
      return true;
    }
    ForestPlacement placement(g_, comp, orders);
    if (!placement.run()) return false;
    if (out) *out = placement.sequences();
    return true;
  }

  // Dynamic program over tuples "number of paths of each distinct order
  // already placed", one component at a time.
  bool combine(const std::vector<Mask>& comps, std::span<const int> orders, Sequences* out) {
    std::vector<int> group_order, group_count;
    for (int k : orders) {
      if (group_order.empty() || group_order.back() != k) {
        group_order.push_back(k);
        group_count.push_back(0);
      }
      ++group_count.back();
    }
    const std::size_t groups = group_order.size();
    std::vector<int> radix(groups + 1, 1);
    for (std::size_t g = 0; g < groups; ++g) radix[g + 1] = radix[g] * (group_count[g] + 1);
    const int states = radix[groups];
    const int full = states - 1;
    auto digit = [&](int code, std::size_t g) { return (code / radix[g]) % (group_count[g] + 1); };

    // parent[c][state] = (previous state, tuple placed in component c)
    std::vector<std::vector<std::pair<int, int>>> parent(comps.size(), std::vector<std::pair<int, int>>(states, {-1, -1}));
    std::vector<char> reachable(states, 0);
    reachable[0] = 1;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const int size = count(comps[c]);
      std::vector<signed char> hostable(states, -1);
      std::vector<char> next = reachable;
      for (int s = 0; s < states; ++s) parent[c][s] = reachable[s] ? std::make_pair(s, 0) : std::make_pair(-1, -1);
      for (int s = 0; s < states; ++s) {
        if (!reachable[s]) continue;
        // tuples t with s + t <= full, largest first
        for (int t = full; t > 0; --t) {
          bool fits = true;
          int need = 0;
          for (std::size_t g = 0; g < groups && fits; ++g) {
            const int dt = digit(t, g);
            if (digit(s, g) + dt > group_count[g]) fits = false;
            need += dt * group_order[g];
          }
          if (!fits || need > size) continue;
          const int target = s + t;
          if (next[target]) continue;
          if (hostable[t] < 0) {
            std::vector<int> sub;
            for (std::size_t g = 0; g < groups; ++g) {
              for (int j = 0; j < digit(t, g); ++j) sub.push_back(group_order[g]);
            }
            hostable[t] = component_hosts(comps[c], sub, nullptr) ? 1 : 0;
          }
          if (hostable[t]) {
            next[target] = 1;
            parent[c][target] = {s, t};
          }
        }
      }
      reachable.swap(next);
      if (reachable[full]) {
        if (out) rebuild(comps, c, full, parent, group_order, digit, groups, out);
        return true;
      }
    }
    return false;
  }

  template <typename Digit>
  void rebuild(const std::vector<Mask>& comps, std::size_t last, int state,
               const std::vector<std::vector<std::pair<int, int>>>& parent, const std::vector<int>& group_order,
               Digit&& digit, std::size_t groups, Sequences* out) {
    Sequences collected;
    for (std::size_t c = last + 1; c-- > 0;) {
      auto [prev, t] = parent[c][state];
      if (t > 0) {
        std::vector<int> sub;
        for (std::size_t g = 0; g < groups; ++g) {
          for (int j = 0; j < digit(t, g); ++j) sub.push_back(group_order[g]);
        }
        Sequences part;
        component_hosts(comps[c], sub, &part);
        for (auto& p : part) collected.push_back(std::move(p));
      }
      state = prev;
    }
    std::stable_sort(collected.begin(), collected.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    *out = std::move(collected);
  }

  bool right(int end, int remaining, Mask unused) {
    if (remaining == 0) return left(anchor_u_, 0, unused);
    if (count(reach(g_, end, unused)) - 1 < remaining) return false;
    for (Mask c = anchor_twins_.reduce(g_.adj[end] & unused, unused); c; c &= c - 1) {
      const int w = lowest(c);
      right_.push_back(w);
      if (right(w, remaining - 1, unused & ~bit_of(w))) return true;
      right_.pop_back();
    }
    return false;
  }

  bool left(int end, int placed, Mask unused) {
    const int want = anchor_order_ - 2 - static_cast<int>(right_.size() - 1);
    if (placed == want) return finish(unused);
    if (count(reach(g_, end, unused)) - 1 < want - placed) return false;
    for (Mask c = anchor_twins_.reduce(g_.adj[end] & unused, unused); c; c &= c - 1) {
      const int w = lowest(c);
      left_.push_back(w);
      if (left(w, placed + 1, unused & ~bit_of(w))) return true;
      left_.pop_back();
    }
    return false;
  }

  bool finish(Mask unused) {
    auto it = memo_.find(unused);
    if (it != memo_.end() && !it->second) return false;
    Sequences seqs;
    const bool ok = hosts(unused, rest_, &seqs);
    memo_[unused] = ok;
    if (ok) rest_seqs_ = std::move(seqs);
    return ok;
  }

 public:
  // Anchored search entry: enumerate every split of the anchored path into a
  // right part (after v) and a left part (before u).
  bool anchored(int u, int v, Mask allowed, std::span<const int> orders, Sequences* out) {
    const Mask endpoints = bit_of(u) | bit_of(v);
    if ((allowed & endpoints) != endpoints || !g_.adjacent(u, v)) return false;
    int total = 0;
    for (int k : orders) total += k;
    if (total > count(allowed)) return false;
    anchor_twins_ = TwinClasses::compute(g_, allowed, endpoints);
    anchor_u_ = u;
    anchor_v_ = v;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (i > 0 && orders[i] == orders[i - 1]) continue;
      rest_.assign(orders.begin(), orders.end());
      rest_.erase(rest_.begin() + static_cast<std::ptrdiff_t>(i));
      memo_.clear();
      anchor_order_ = orders[i];
      for (int r = 0; r <= anchor_order_ - 2; ++r) {
        right_.assign(1, v);
        left_.clear();
        if (right(v, r, allowed & ~endpoints)) {
          if (out) {
            std::vector<int> path(left_.rbegin(), left_.rend());
            path.push_back(u);
            path.insert(path.end(), right_.begin(), right_.end());
            out->clear();
            std::size_t next_rest = 0;
            for (std::size_t j = 0; j < orders.size(); ++j) {
              out->push_back(j == i ? path : rest_seqs_[next_rest++]);
            }
          }
          return true;
        }
      }
    }
    return false;
  }

 private:
  const SmallGraph& g_;
  TwinClasses anchor_twins_;
  int anchor_u_ = 0, anchor_v_ = 0, anchor_order_ = 0;
  std::vector<int> rest_;
  std::vector<int> right_, left_;
  Sequences rest_seqs_;
  std::unordered_map<Mask, bool> memo_;
};

inline ForestMatch to_match(const Sequences& seqs) {
  ForestMatch m;
  m.found = true;
  for (const auto& s : seqs) m.paths.push_back(PathWitness{PathWitness::Kind::kPath, s});
  return m;
}

inline void check_forest_caps(const Graph& g, const PathForest& f, const char* engine) {
  if (g.order() > kForestHostCap) {
    throw CapabilityError(std::string(engine) + ": host order " + std::to_string(g.order()) +
                          " exceeds the exact-search cap of " + std::to_string(kForestHostCap));
  }
  if (f.total_order() > kForestTotalCap) {
    throw CapabilityError(std::string(engine) + ": forest order " + std::to_string(f.total_order()) +
                          " exceeds the exact-search cap of " + std::to_string(kForestTotalCap));
  }
}

}  // namespace detail

/// Exact containment of the vertex-disjoint path forest F in G, with one
/// witness path per member of F on success. Caps: |G| <= 32, |F| <= 24.
inline ForestMatch contains_forest(const Graph& g, const PathForest& forest) {
  detail::check_forest_caps(g, forest, "contains_forest");
  const auto sg = SmallGraph::from(g, kForestHostCap, "contains_forest");
  detail::ForestHost host(sg);
  detail::Sequences seqs;
  if (!host.hosts(sg.vertices(), forest.orders(), &seqs)) return {};
  return detail::to_match(seqs);
}

/// Exact test for a copy of F that uses the edge uv. When G - uv is F-free,
/// this decides whether G contains F while only exploring copies through uv.
inline ForestMatch contains_forest_through_edge(const Graph& g, const PathForest& forest, Vertex u,
                                                Vertex v) {
  detail::check_forest_caps(g, forest, "contains_forest_through_edge");
  const auto sg = SmallGraph::from(g, kForestHostCap, "contains_forest_through_edge");
  require(u != v && u >= 0 && v >= 0 && u < sg.n && v < sg.n, "contains_forest_through_edge: bad edge");
  detail::ForestHost host(sg);
  detail::Sequences seqs;
  if (!host.anchored(u, v, sg.vertices(), forest.orders(), &seqs)) return {};
  return detail::to_match(seqs);
}

/// Checks that `m` is a genuine copy of F in G.
inline bool is_valid_forest_match(const Graph& g, const PathForest& forest, const ForestMatch& m) {
  if (!m.found || m.paths.size() != forest.size()) return false;
  std::vector<char> used(g.order(), 0);
  for (std::size_t i = 0; i < m.paths.size(); ++i) {
    const auto& p = m.paths[i];
    if (static_cast<int>(p.order()) != forest.orders()[i] || !is_valid_witness(g, p)) return false;
    for (Vertex v : p.vertices) {
      if (used[v]) return false;
      used[v] = 1;
    }
  }
  return true;
}

}  // namespace pathturan
