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

// Builders for the extremal and forbidden configurations. Every builder lays
// its roles out in contiguous vertex blocks where it can, so large instances
// are filled a word at a time.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathturan/checked.hpp"
#include "pathturan/errors.hpp"
#include "pathturan/graph.hpp"

namespace pathturan {

enum class Family {
  kH,
  kZ,
  kHks,
  kHkM2,
  kHkP3,
  kFkt,
  kPathExtremal,
  kPairWitness,
  kTuran,
  kComplete,
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::kH: return "H";
    case Family::kZ: return "Z";
    case Family::kHks: return "Hks";
    case Family::kHkM2: return "HkM2";
    case Family::kHkP3: return "HkP3";
    case Family::kFkt: return "Fkt";
    case Family::kPathExtremal: return "path-extremal";
    case Family::kPairWitness: return "pair-witness";
    case Family::kTuran: return "turan";
    case Family::kComplete: return "complete";
  }
  return "?";
}

/// Tagged description of one construction. Roles are stored as an index per
/// vertex into `labels`, which keeps large instances cheap.
struct ConstructionSpec {
  Family family = Family::kComplete;
  std::vector<std::int64_t> params;
  std::vector<std::string> labels;
  std::vector<std::uint16_t> roles;

  const std::string& role(Vertex v) const { return labels.at(roles.at(static_cast<std::size_t>(v))); }

  std::vector<Vertex> members(const std::string& label) const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < roles.size(); ++v) {
      if (labels[roles[v]] == label) out.push_back(static_cast<Vertex>(v));
    }
    return out;
  }

  std::string describe() const {
    std::string s = family_name(family);
    s += '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(params[i]);
    }
    return s + ')';
  }
};

struct Construction {
  ConstructionSpec spec;
  Graph graph;
};

namespace detail {

class RoleWriter {
 public:
  RoleWriter(ConstructionSpec& spec, std::size_t n) : spec_(spec) { spec_.roles.assign(n, 0); }

  std::uint16_t label(std::string name) {
    for (std::size_t i = 0; i < spec_.labels.size(); ++i) {
      if (spec_.labels[i] == name) return static_cast<std::uint16_t>(i);
    }
    spec_.labels.push_back(std::move(name));
    return static_cast<std::uint16_t>(spec_.labels.size() - 1);
  }

  void assign(Vertex lo, Vertex hi, const std::string& name) {
    const auto id = label(name);
    for (Vertex v = lo; v < hi; ++v) spec_.roles[static_cast<std::size_t>(v)] = id;
  }

  void assign(Vertex v, const std::string& name) { assign(v, v + 1, name); }

 private:
  ConstructionSpec& spec_;
};

inline Vertex as_vertex(std::int64_t x) { return static_cast<Vertex>(x); }

inline void check_order(std::int64_t n) {
  require(n >= 0 && n <= (std::int64_t{1} << 20), "construction order out of range: " + std::to_string(n));
}

}  // namespace detail

/// H(n,k,a): vertices A (k-2a), then B (a), then C (n-k+a). Clique on A u B,
/// all edges between B and C, C independent.
inline Construction build_H(std::int64_t n, std::int64_t k, std::int64_t a) {
  require(a >= 1 && 2 * a <= k && k <= n, "build_H needs n >= k >= 2a and a >= 1");
  detail::check_order(n);
  Construction c{{Family::kH, {n, k, a}, {}, {}}, Graph(static_cast<std::size_t>(n))};
  const Vertex b0 = detail::as_vertex(k - 2 * a), c0 = detail::as_vertex(k - a), end = detail::as_vertex(n);
  c.graph.add_clique_range(0, c0);
  c.graph.add_biclique_range(b0, c0, c0, end);
  detail::RoleWriter roles(c.spec, static_cast<std::size_t>(n));
  roles.assign(0, b0, "A");
  roles.assign(b0, c0, "B");
  roles.assign(c0, end, "C");
  return c;
}

/// Number of K_{t-1} blocks in Z(n,k,t), or -1 when (n,k,t) admits none.
inline std::int64_t z_block_count(std::int64_t n, std::int64_t k, std::int64_t t) {
  if (t < 2 || k - t - 2 < 0) return -1;
  const std::int64_t rest = n - 2 - (k - t - 2);
  if (rest < 0 || rest % (t - 1) != 0) return -1;
  const std::int64_t blocks = rest / (t - 1);
  return blocks >= 2 ? blocks : -1;
}

/// Z(n,k,t): two apexes adjacent to everything, over K_{k-t-2} plus l copies
/// of K_{t-1}, where n = 2 + (k-t-2) + l(t-1) and l >= 2.
inline Construction build_Z(std::int64_t n, std::int64_t k, std::int64_t t) {
  require(t >= 2 && k - t - 2 >= 0, "build_Z needs t >= 2 and k >= t + 2");
  const std::int64_t blocks = z_block_count(n, k, t);
  require(blocks >= 2, "build_Z: (n - k + t) must be a multiple of t - 1 giving at least 2 blocks");
  detail::check_order(n);
  Construction c{{Family::kZ, {n, k, t}, {}, {}}, Graph(static_cast<std::size_t>(n))};
  detail::RoleWriter roles(c.spec, static_cast<std::size_t>(n));
  const Vertex end = detail::as_vertex(n);
  c.graph.add_edge(0, 1);
  c.graph.add_biclique_range(0, 2, 2, end);
  roles.assign(0, 2, "apex");
  Vertex lo = 2;
  Vertex hi = lo + detail::as_vertex(k - t - 2);
  c.graph.add_clique_range(lo, hi);
  roles.assign(lo, hi, "block-0");
  for (std::int64_t b = 1; b <= blocks; ++b) {
    lo = hi;
    hi = lo + detail::as_vertex(t - 1);
    c.graph.add_clique_range(lo, hi);
    roles.assign(lo, hi, "block-" + std::to_string(b));
  }
  return c;
}

/// H_k(s) on the path x1..x_{2k+1} (vertex i is x_{i+1}): path edges,
/// cliques on A = {x1..xs} and B = the last s vertices, and all edges
/// between A u B and C = {x_{s+1}, x_{s+3}, .., x_{2k-s+1}}. D is the rest.
inline Construction build_Hks(std::int64_t k, std::int64_t s) {
  require(k >= 4 && s >= 1 && s <= k - 1, "build_Hks needs k >= 4 and 1 <= s <= k - 1");
  const std::int64_t n = 2 * k + 1;
  Construction c{{Family::kHks, {k, s}, {}, {}}, Graph(static_cast<std::size_t>(n))};
  Graph& g = c.graph;
  detail::RoleWriter roles(c.spec, static_cast<std::size_t>(n));
  auto x = [](std::int64_t i) { return detail::as_vertex(i - 1); };
  for (std::int64_t i = 1; i < n; ++i) g.add_edge(x(i), x(i + 1));
  g.add_clique_range(x(1), x(s) + 1);
  g.add_clique_range(x(n - s + 1), x(n) + 1);
  roles.assign(x(1), x(s) + 1, "A");
  roles.assign(x(n - s + 1), x(n) + 1, "B");
  for (std::int64_t i = s + 1; i <= 2 * k - s + 1; ++i) {
    if ((i - s - 1) % 2 == 0) {
      roles.assign(x(i), "C");
      for (std::int64_t j = 1; j <= s; ++j) {
        g.add_edge(x(i), x(j));
        g.add_edge(x(i), x(n - j + 1));
      }
    } else {
      roles.assign(x(i), "D");
    }
  }
  return c;
}

/// H_k(M_2) on the same labels as H_k(2): C = {x3, x5, .., x_{2k-1}},
/// A = {x1, x2}, B = {x_{2k}, x_{2k+1}}, D = {x4, x6, .., x_{2k-2}}. Edges are
/// K_{C, A u B u D} plus the matching x1x2, x_{2k}x_{2k+1}.
inline Construction build_HkM2(std::int64_t k) {
  require(k >= 4, "build_HkM2 needs k >= 4");
  const std::int64_t n = 2 * k + 1;
  Construction c{{Family::kHkM2, {k}, {}, {}}, Graph(static_cast<std::size_t>(n))};
  Graph& g = c.graph;
  detail::RoleWriter roles(c.spec, static_cast<std::size_t>(n));
  auto x = [](std::int64_t i) { return detail::as_vertex(i - 1); };
  std::vector<Vertex> side_c, other;
  for (std::int64_t i = 1; i <= n; ++i) {
    std::string role = i <= 2 ? "A" : i >= 2 * k ? "B" : (i % 2 == 1 ? "C" : "D");
    roles.assign(x(i), role);
    (role == "C" ? side_c : other).push_back(x(i));
  }
  g.add_biclique(side_c, other);
  g.add_edge(x(1), x(2));
  g.add_edge(x(2 * k), x(2 * k + 1));
  return c;
}

/// H_k(P_3): a1, a2, a3, then B (k-1), then C (k-1). Edges are K_{B, A u C}
/// plus the path a1 a2 a3.
inline Construction build_HkP3(std::int64_t k) {
  require(k >= 4, "build_HkP3 needs k >= 4");
  const std::int64_t n = 2 * k + 1;
  Construction c{{Family::kHkP3, {k}, {}, {}}, Graph(static_cast<std::size_t>(n))};
  Graph& g = c.graph;
  detail::RoleWriter roles(c.spec, static_cast<std::size_t>(n));
  const Vertex b0 = 3, c0 = detail::as_vertex(k + 2), end = detail::as_vertex(n);
  g.add_biclique_range(b0, c0, 0, 3);
  g.add_biclique_range(b0, c0, c0, end);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  roles.assign(0, "a1");
  roles.assign(1, "a2");
  roles.assign(2, "a3");
  roles.assign(b0, c0, "B");
  roles.assign(c0, end, "C");
  return c;
}

/// F_k(t) on x1..x_{2k+t}: cliques on A = {x1..xk} and B = {x_{k+t+1}..},
/// the path x_k .. x_{k+t+1} through C, x_k joined to B, x_{k+t+1} to A.
inline Construction build_Fkt(std::int64_t k, std::int64_t t) {
  require(k >= 3 && t >= 2, "build_Fkt needs k >= 3 and t >= 2");
  const std::int64_t n = 2 * k + t;
  detail::check_order(n);
  Construction c{{Family::kFkt, {k, t}, {}, {}}, Graph(static_cast<std::size_t>(n))};
  Graph& g = c.graph;
  detail::RoleWriter roles(c.spec, static_cast<std::size_t>(n));
  const Vertex a_end = detail::as_vertex(k), b0 = detail::as_vertex(k + t), end = detail::as_vertex(n);
  g.add_clique_range(0, a_end);
  g.add_clique_range(b0, end);
  for (Vertex v = a_end - 1; v < b0; ++v) g.add_edge(v, v + 1);
  for (Vertex v = b0; v < end; ++v) g.add_edge(a_end - 1, v);
  for (Vertex v = 0; v < a_end; ++v) g.add_edge(b0, v);
  roles.assign(0, a_end, "A");
  roles.assign(a_end, b0, "C");
  roles.assign(b0, end, "B");
  return c;
}

/// floor(n/(k-1)) copies of K_{k-1} plus K_r on the remainder.
inline Construction build_path_extremal(std::int64_t n, std::int64_t k) {
  require(k >= 3 && n >= 0, "build_path_extremal needs k >= 3 and n >= 0");
  detail::check_order(n);
  Construction c{{Family::kPathExtremal, {n, k}, {}, {}}, Graph(static_cast<std::size_t>(n))};
  detail::RoleWriter roles(c.spec, static_cast<std::size_t>(n));
  std::int64_t index = 0;
  for (Vertex lo = 0; lo < n; lo += detail::as_vertex(k - 1), ++index) {
    const Vertex hi = std::min(detail::as_vertex(n), lo + detail::as_vertex(k - 1));
    c.graph.add_clique_range(lo, hi);
    roles.assign(lo, hi, "block-" + std::to_string(index));
  }
  return c;
}

/// K_{s+t-1} disjoint from an extremal P_t-free graph on the rest. There are
/// no cross edges: any would let a path leave the clique.
inline Construction build_pair_witness(std::int64_t n, std::int64_t s, std::int64_t t) {
  require(s >= t && t >= 3 && n >= s + t - 1, "build_pair_witness needs s >= t >= 3 and n >= s + t - 1");
  detail::check_order(n);
  const std::int64_t q = s + t - 1;
  Construction c{{Family::kPairWitness, {n, s, t}, {}, {}}, Graph(static_cast<std::size_t>(n))};
  c.graph.add_clique_range(0, detail::as_vertex(q));
  detail::RoleWriter roles(c.spec, static_cast<std::size_t>(n));
  roles.assign(0, detail::as_vertex(q), "clique");
  std::int64_t index = 0;
  for (Vertex lo = detail::as_vertex(q); lo < n; lo += detail::as_vertex(t - 1), ++index) {
    const Vertex hi = std::min(detail::as_vertex(n), lo + detail::as_vertex(t - 1));
    c.graph.add_clique_range(lo, hi);
    roles.assign(lo, hi, "block-" + std::to_string(index));
  }
  return c;
}

/// Balanced complete r-partite graph T(n,r).
inline Construction build_turan(std::int64_t n, std::int64_t r) {
  require(r >= 1 && n >= 0, "build_turan needs r >= 1 and n >= 0");
  detail::check_order(n);
  Construction c{{Family::kTuran, {n, r}, {}, {}}, Graph(static_cast<std::size_t>(n))};
  detail::RoleWriter roles(c.spec, static_cast<std::size_t>(n));
  std::vector<Vertex> start;
  Vertex lo = 0;
  for (std::int64_t p = 0; p < r; ++p) {
    const Vertex size = detail::as_vertex(n / r + (p < n % r ? 1 : 0));
    start.push_back(lo);
    roles.assign(lo, lo + size, "part-" + std::to_string(p));
    lo += size;
  }
  start.push_back(lo);
  for (std::size_t p = 0; p + 1 < start.size(); ++p) {
    if (start[p + 1] < detail::as_vertex(n)) c.graph.add_biclique_range(start[p], start[p + 1], start[p + 1], detail::as_vertex(n));
  }
  return c;
}

inline Construction build_complete(std::int64_t n) {
  require(n >= 0, "build_complete needs n >= 0");
  detail::check_order(n);
  Construction c{{Family::kComplete, {n}, {}, {}}, Graph(static_cast<std::size_t>(n))};
  c.graph.add_clique_range(0, detail::as_vertex(n));
  detail::RoleWriter roles(c.spec, static_cast<std::size_t>(n));
  roles.assign(0, detail::as_vertex(n), "K");
  return c;
}

/// Rebuilds a construction from its spec.
inline Construction rebuild(const ConstructionSpec& spec) {
  const auto& p = spec.params;
  auto need = [&](std::size_t count) {
    require(p.size() == count, std::string("spec for ") + family_name(spec.family) + " needs " +
                                   std::to_string(count) + " parameters");
  };
  switch (spec.family) {
    case Family::kH: need(3); return build_H(p[0], p[1], p[2]);
    case Family::kZ: need(3); return build_Z(p[0], p[1], p[2]);
    case Family::kHks: need(2); return build_Hks(p[0], p[1]);
    case Family::kHkM2: need(1); return build_HkM2(p[0]);
    case Family::kHkP3: need(1); return build_HkP3(p[0]);
    case Family::kFkt: need(2); return build_Fkt(p[0], p[1]);
    case Family::kPathExtremal: need(2); return build_path_extremal(p[0], p[1]);
    case Family::kPairWitness: need(3); return build_pair_witness(p[0], p[1], p[2]);
    case Family::kTuran: need(2); return build_turan(p[0], p[1]);
    case Family::kComplete: need(1); return build_complete(p[0]);
  }
  throw UsageError("unknown construction family");
}

}  // namespace pathturan
