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

// Closed forms for Turan numbers of paths and path forests. Everything is
// exact int64 arithmetic with overflow checks; half-integer bounds are
// returned doubled.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathturan/checked.hpp"
#include "pathturan/constructions.hpp"
#include "pathturan/errors.hpp"
#include "pathturan/path_forest.hpp"
#include "pathturan/report.hpp"

namespace pathturan {

/// c(n,m,l): C(n,2) when n <= m-1, else with n = (m-1) + t(l-1) + r,
/// 0 <= r < l-1, the value C(m-1,2) + t C(l-1,2) + C(r,2).
inline std::int64_t c_def(std::int64_t n, std::int64_t m, std::int64_t l) {
  require(m >= l && l >= 3 && n >= 0, "c_def needs m >= l >= 3 and n >= 0");
  if (n <= m - 1) return choose2(n);
  const std::int64_t rest = n - (m - 1);
  const std::int64_t t = rest / (l - 1);
  const std::int64_t r = rest % (l - 1);
  return checked_add(checked_add(choose2(m - 1), checked_mul(t, choose2(l - 1))), choose2(r));
}

/// c(n,m) = C(floor(m/2)-1, 2) + floor((m-2)/2) (n - floor(m/2) + 1).
inline std::int64_t c_small(std::int64_t n, std::int64_t m) {
  require(m >= 4 && n >= m / 2 - 1, "c_small needs m >= 4 and n >= floor(m/2) - 1");
  return checked_add(choose2(m / 2 - 1), checked_mul((m - 2) / 2, n - m / 2 + 1));
}

/// h(n,k,a) = e(H(n,k,a)) = C(k-a,2) + (n-k+a) a.
inline std::int64_t h_formula(std::int64_t n, std::int64_t k, std::int64_t a) {
  require(a >= 1 && k >= 2 * a && n >= k, "h_formula needs n >= k >= 2a and a >= 1");
  return checked_add(choose2(k - a), checked_mul(n - k + a, a));
}

/// ex(n,P_k) = s C(k-1,2) + C(r,2) with n = s(k-1) + r, 0 <= r <= k-2.
/// For n < k this is C(n,2).
inline std::int64_t ex_path(std::int64_t n, std::int64_t k) {
  require(k >= 3 && n >= 0, "ex_path needs k >= 3 and n >= 0");
  return checked_add(checked_mul(n / (k - 1), choose2(k - 1)), choose2(n % (k - 1)));
}

struct HalfBound {
  std::int64_t doubled = 0;  ///< twice the bound
  bool equality = false;     ///< whether the bound is attained
};

/// The path bound (k-2)n/2, attained iff (k-1) divides n.
inline HalfBound ex_path_eg_bound(std::int64_t n, std::int64_t k) {
  require(k >= 3 && n >= k, "ex_path_eg_bound needs n >= k >= 3");
  return {checked_mul(k - 2, n), n % (k - 1) == 0};
}

/// ex(n,M_t) = max{C(2t-1,2), C(t-1,2) + (t-1)(n-t+1)}.
inline std::int64_t ex_matching(std::int64_t n, std::int64_t t) {
  require(t >= 1 && n >= 2 * t, "ex_matching needs t >= 1 and n >= 2t");
  return std::max(choose2(2 * t - 1), checked_add(choose2(t - 1), checked_mul(t - 1, n - t + 1)));
}

/// The clique-plus-extremal value c(n,a+b,b): K_{a+b-1} next to an
/// extremal P_b-free graph.
inline std::int64_t c_pair(std::int64_t n, std::int64_t a, std::int64_t b) { return c_def(n, a + b, b); }

enum class Branch { kCliquePlusExtremal, kSinglePath, kHGraph, kComplete };

inline const char* branch_name(Branch b) {
  switch (b) {
    case Branch::kCliquePlusExtremal: return "clique-plus-extremal";
    case Branch::kSinglePath: return "single-path";
    case Branch::kHGraph: return "h-graph";
    case Branch::kComplete: return "complete-graph";
  }
  return "?";
}

struct ExtremalResult {
  std::int64_t value = 0;
  Branch branch = Branch::kComplete;
  ConstructionSpec witness;
  /// Every branch value in listing order (clique-plus, single-path, h).
  std::vector<std::int64_t> branch_values;
};

inline void check_two_paths(std::int64_t k1, std::int64_t k2) {
  require(k1 >= k2 && k2 > 3, "two_paths_value needs k1 >= k2 > 3");
  require(k1 % 2 == 1 && k2 % 2 == 1, "two_paths_value needs odd path orders");
}

/// ex(n, P_k1 u P_k2) for odd k1 >= k2 > 3, with the branch attaining the
/// max (ties go to the earlier branch) and a witness. Below n = k1 + k2 the
/// forest does not fit and K_n is returned as the complete-graph branch.
inline ExtremalResult two_paths_value(std::int64_t n, std::int64_t k1, std::int64_t k2) {
  check_two_paths(k1, k2);
  require(n >= 0, "two_paths_value needs n >= 0");
  ExtremalResult r;
  if (n < k1 + k2) {
    r.value = choose2(n);
    r.branch = Branch::kComplete;
    r.witness = build_complete(n).spec;
    return r;
  }
  const std::int64_t hk = k1 + k2 - 2;
  const std::int64_t ha = k1 / 2 + k2 / 2 - 1;
  r.branch_values = {c_pair(n, k1, k2), ex_path(n, k1), h_formula(n, hk, ha)};
  std::size_t best = 0;
  for (std::size_t i = 1; i < r.branch_values.size(); ++i) {
    if (r.branch_values[i] > r.branch_values[best]) best = i;
  }
  r.value = r.branch_values[best];
  switch (best) {
    case 0:
      r.branch = Branch::kCliquePlusExtremal;
      r.witness = build_pair_witness(n, k1, k2).spec;
      break;
    case 1:
      r.branch = Branch::kSinglePath;
      r.witness = build_path_extremal(n, k1).spec;
      break;
    default:
      r.branch = Branch::kHGraph;
      r.witness = build_H(n, hk, ha).spec;
      break;
  }
  return r;
}

enum class Interpretation { kLiteral, kDoubled };

struct ConjectureValue {
  std::int64_t value = 0;
  /// One entry per clique-plus branch j = 1..m, then the last branch (absent
  /// when its c(n,M) term is undefined for this n).
  std::vector<std::int64_t> branches;
  bool last_branch_defined = true;
  std::size_t argmax = 0;
};

/// The conjectured max over c(n, k_1+..+k_j, k_j) for j = 1..m and the last
/// branch c(n, M) + c, where M = sum floor(k_i/2) (literal) or twice that
/// (doubled), and c = 1 iff every k_i is odd.
inline ConjectureValue conjecture_value(std::int64_t n, const PathForest& forest,
                                        Interpretation interpretation = Interpretation::kDoubled) {
  const auto& k = forest.orders();
  require(k.front() > 3, "conjecture_value needs k1 > 3");
  for (int ki : k) require(ki >= 3, "conjecture_value needs every path order >= 3");
  require(n >= 0, "conjecture_value needs n >= 0");
  ConjectureValue out;
  std::int64_t prefix = 0;
  std::int64_t halves = 0;
  bool all_odd = true;
  for (int ki : k) {
    prefix += ki;
    halves += ki / 2;
    all_odd = all_odd && ki % 2 == 1;
    out.branches.push_back(c_def(n, prefix, ki));
  }
  const std::int64_t m = interpretation == Interpretation::kDoubled ? 2 * halves : halves;
  // floor(m/2) - 1 and floor((m-2)/2) vanish for m in {2, 3}, so the closed
  // form extends there; below its n-range the term is simply absent.
  if (m >= 2 && n >= m / 2 - 1) {
    out.branches.push_back(checked_add(checked_add(choose2(m / 2 - 1), checked_mul((m - 2) / 2, n - m / 2 + 1)),
                                       all_odd ? 1 : 0));
  } else {
    out.last_branch_defined = false;
  }
  for (std::size_t i = 0; i < out.branches.size(); ++i) {
    if (out.branches[i] > out.branches[out.argmax]) out.argmax = i;
  }
  out.value = out.branches[out.argmax];
  return out;
}

/// Connected bound for P_{2k1+1} u P_{2k2+1}:
/// max{h(n, 2k1+2k2+1, 1), h(n, 2k1+2k2, k1+k2-1)}.
inline std::int64_t f_conn(std::int64_t n, std::int64_t k1, std::int64_t k2) {
  require(k1 >= k2 && k2 >= 2 && n >= 2 * k1 + 2 * k2 + 1, "f_conn needs k1 >= k2 >= 2 and n >= 2k1+2k2+1");
  return std::max(h_formula(n, 2 * k1 + 2 * k2 + 1, 1), h_formula(n, 2 * k1 + 2 * k2, k1 + k2 - 1));
}

/// max{c(n, 2k1+2k2+2, 2k2+1), ex(n, P_{2k1+1}), h(n, 2k1+2k2, k1+k2-1)}.
inline std::int64_t g_value(std::int64_t n, std::int64_t k1, std::int64_t k2) {
  require(k1 >= k2 && k2 >= 2 && n >= 2 * k1 + 2 * k2 + 1, "g_value needs k1 >= k2 >= 2 and n >= 2k1+2k2+1");
  return std::max({c_def(n, 2 * k1 + 2 * k2 + 2, 2 * k2 + 1), ex_path(n, 2 * k1 + 1),
                   h_formula(n, 2 * k1 + 2 * k2, k1 + k2 - 1)});
}

/// Edge threshold above which a 2-connected graph contains a member of the
/// forbidden family: max{h(n,2k,k-1), h(n,2k+1,2)}.
inline std::int64_t stability_threshold(std::int64_t n, std::int64_t k) {
  require(k >= 5 && n >= 2 * k + 1, "stability_threshold needs k >= 5 and n >= 2k+1");
  return std::max(h_formula(n, 2 * k, k - 1), h_formula(n, 2 * k + 1, 2));
}

/// max{h(n,k,floor(k/2)), h(n,k,2)}: beyond it a 2-connected graph has a
/// cycle of length at least k.
inline std::int64_t kopylov_threshold(std::int64_t n, std::int64_t k) {
  require(k >= 5 && n >= k, "kopylov_threshold needs n >= k >= 5");
  return std::max(h_formula(n, k, k / 2), h_formula(n, k, 2));
}

/// Twice (r-3)(n-2)/2 + 2n - 3, the edge bound for a 2-connected graph whose
/// longest path between the ends of some edge has at most r vertices.
inline std::int64_t fan_bound_doubled(std::int64_t n, std::int64_t r) {
  require(r >= 3 && n >= 2, "fan_bound needs r >= 3 and n >= 2");
  return checked_add(checked_mul(r - 3, n - 2), checked_sub(checked_mul(4, n), 6));
}

/// Literal and uniform values for ex(n, P_{2l+1} u P_3).
struct P3BranchReport {
  std::int64_t n = 0, l = 0;
  std::int64_t clique_branch = 0;
  std::int64_t path_branch = 0;
  std::int64_t literal_h = 0;  ///< h(n, 2l, l-1)
  std::int64_t uniform_h = 0;  ///< h(n, 2l+2, l)
  std::int64_t literal_value = 0;
  std::int64_t uniform_value = 0;
  bool discrepancy = false;
};

inline P3BranchReport p3_branch_report(std::int64_t n, std::int64_t l) {
  require(l >= 2 && n > 2 * l + 4, "p3_branch_report needs l >= 2 and n > 2l + 4");
  P3BranchReport r;
  r.n = n;
  r.l = l;
  r.clique_branch = c_pair(n, 2 * l + 1, 3);
  r.path_branch = ex_path(n, 2 * l + 1);
  r.literal_h = h_formula(n, 2 * l, l - 1);
  r.uniform_h = h_formula(n, 2 * l + 2, l);
  r.literal_value = std::max({r.clique_branch, r.path_branch, r.literal_h});
  r.uniform_value = std::max({r.clique_branch, r.path_branch, r.uniform_h});
  r.discrepancy = r.literal_value != r.uniform_value;
  return r;
}

struct GridRanges {
  std::int64_t k_min = 2;
  std::int64_t k_max = 12;
  std::int64_t n_max = 300;
};

namespace detail {

inline Json point(std::initializer_list<std::pair<const char*, std::int64_t>> values) {
  Json j = Json::object();
  for (auto [key, v] : values) j[key] = v;
  return j;
}

}  // namespace detail

/// h(|C|, 2k1+2k2+1, 1) + ex(n-|C|, P_{2k2+1}) < c(n, 2k1+1, 2k2+1) for
/// k1 >= k2 >= 2 and 2k1+2k2+2 <= |C| <= n.
inline CheckReport prop_grid_33(const GridRanges& g = {}) {
  CheckReport rep;
  rep.suite = "prop33";
  rep.params = detail::point({{"k_min", g.k_min}, {"k_max", g.k_max}, {"n_max", g.n_max}});
  for (std::int64_t k1 = std::max<std::int64_t>(2, g.k_min); k1 <= g.k_max; ++k1) {
    for (std::int64_t k2 = std::max<std::int64_t>(2, g.k_min); k2 <= k1; ++k2) {
      for (std::int64_t n = 2 * k1 + 2 * k2 + 2; n <= g.n_max; ++n) {
        const std::int64_t rhs = c_pair(n, 2 * k1 + 1, 2 * k2 + 1);
        for (std::int64_t c = 2 * k1 + 2 * k2 + 2; c <= n; ++c) {
          ++rep.samples;
          const std::int64_t lhs = h_formula(c, 2 * k1 + 2 * k2 + 1, 1) + ex_path(n - c, 2 * k2 + 1);
          if (!(lhs < rhs)) {
            auto cex = detail::point({{"k1", k1}, {"k2", k2}, {"C", c}, {"n", n}, {"lhs", lhs}, {"rhs", rhs}});
            rep.violate(cex);
          }
        }
      }
    }
  }
  return rep;
}

/// h(|C|, 2k1+2k2, k1+k2-1) + ex(n-|C|, P_{2k2+1}) <= h(n, 2k1+2k2, k1+k2-1).
inline CheckReport prop_grid_34(const GridRanges& g = {}) {
  CheckReport rep;
  rep.suite = "prop34";
  rep.params = detail::point({{"k_min", g.k_min}, {"k_max", g.k_max}, {"n_max", g.n_max}});
  for (std::int64_t k1 = std::max<std::int64_t>(2, g.k_min); k1 <= g.k_max; ++k1) {
    for (std::int64_t k2 = std::max<std::int64_t>(2, g.k_min); k2 <= k1; ++k2) {
      const std::int64_t k = 2 * k1 + 2 * k2, a = k1 + k2 - 1;
      for (std::int64_t n = k + 2; n <= g.n_max; ++n) {
        const std::int64_t rhs = h_formula(n, k, a);
        for (std::int64_t c = k + 2; c <= n; ++c) {
          ++rep.samples;
          const std::int64_t lhs = h_formula(c, k, a) + ex_path(n - c, 2 * k2 + 1);
          if (!(lhs <= rhs)) {
            rep.violate(detail::point({{"k1", k1}, {"k2", k2}, {"C", c}, {"n", n}, {"lhs", lhs}, {"rhs", rhs}}));
          }
        }
      }
    }
  }
  return rep;
}

/// (k-2)(n-2)/2 + 2n - 3 < h(n, 2k, k-1) for k >= 5 and n > 2k+1, compared
/// doubled. k ranges over 5..2*k_max+1 so that k = k1 + k2 + 1 is covered.
inline CheckReport prop_grid_35(const GridRanges& g = {}) {
  CheckReport rep;
  rep.suite = "prop35";
  const std::int64_t k_top = 2 * g.k_max + 1;
  rep.params = detail::point({{"k_min", 5}, {"k_max", k_top}, {"n_max", g.n_max}});
  for (std::int64_t k = 5; k <= k_top; ++k) {
    for (std::int64_t n = 2 * k + 2; n <= g.n_max; ++n) {
      ++rep.samples;
      const std::int64_t lhs = fan_bound_doubled(n, k + 1);
      const std::int64_t rhs = 2 * h_formula(n, 2 * k, k - 1);
      if (!(lhs < rhs)) rep.violate(detail::point({{"k", k}, {"n", n}, {"lhs_doubled", lhs}, {"rhs_doubled", rhs}}));
    }
  }
  return rep;
}

/// c(n, a+b, b) = C(a+b-1, 2) + ex(n-a-b+1, P_b) for 3 <= b <= a <= 2k_max+1,
/// a+b-1 <= n <= n_max; and h(n, 2m, m-1) = c(n, 2m) + 1 for
/// 2 <= m <= 50, 2m <= n <= n_max.
inline CheckReport identity_grid(const GridRanges& g = {}) {
  CheckReport rep;
  rep.suite = "identities";
  const std::int64_t a_top = 2 * g.k_max + 1;
  rep.params = detail::point({{"a_max", a_top}, {"m_max", 50}, {"n_max", g.n_max}});
  for (std::int64_t a = 3; a <= a_top; ++a) {
    for (std::int64_t b = 3; b <= a; ++b) {
      for (std::int64_t n = a + b - 1; n <= g.n_max; ++n) {
        ++rep.samples;
        const std::int64_t lhs = c_pair(n, a, b);
        const std::int64_t rhs = choose2(a + b - 1) + ex_path(n - a - b + 1, b);
        if (lhs != rhs) rep.violate(detail::point({{"a", a}, {"b", b}, {"n", n}, {"lhs", lhs}, {"rhs", rhs}}));
      }
    }
  }
  for (std::int64_t m = 2; m <= 50; ++m) {
    for (std::int64_t n = 2 * m; n <= g.n_max; ++n) {
      ++rep.samples;
      const std::int64_t lhs = h_formula(n, 2 * m, m - 1);
      const std::int64_t rhs = c_small(n, 2 * m) + 1;
      if (lhs != rhs) rep.violate(detail::point({{"m", m}, {"n", n}, {"lhs", lhs}, {"rhs", rhs}}));
    }
  }
  return rep;
}

}  // namespace pathturan
