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

#pragma once

#include <cstdint>

#include "pathturan/constructions.hpp"
#include "pathturan/forest.hpp"
#include "pathturan/formulas.hpp"
#include "pathturan/io.hpp"
#include "pathturan/report.hpp"

namespace pathturan {

/// Compares the two readings of the h-branch of ex(n, P_{2l+1} u P_3):
/// h(n,2l,l-1) (literal) and h(n,2l+2,l) (uniform with the general
/// two-path pattern). The uniform witness H(n,2l+2,l) is built and checked
/// to be forest-free with exactly h(n,2l+2,l) edges. The report passes when
/// that witness checks out; details.discrepancy flags when the two readings
/// give different maxima, and details.literal_exceeded when the witness has
/// more edges than the literal maximum.
inline CheckReport adjudicate_p3(std::int64_t n, std::int64_t l) {
  const P3BranchReport r = p3_branch_report(n, l);
  CheckReport rep;
  rep.suite = "p3-branch";
  rep.params = Json{{"n", n}, {"l", l}, {"forest", std::to_string(2 * l + 1) + ",3"}};
  rep.details = Json{{"clique_branch", r.clique_branch},
                     {"path_branch", r.path_branch},
                     {"literal_h", r.literal_h},
                     {"uniform_h", r.uniform_h},
                     {"literal_value", r.literal_value},
                     {"uniform_value", r.uniform_value},
                     {"discrepancy", r.discrepancy}};
  require_capability(n <= static_cast<std::int64_t>(kForestHostCap), "adjudicate_p3: n exceeds the forest cap of 32");
  const Construction w = build_H(n, 2 * l + 2, l);
  const PathForest forest{static_cast<int>(2 * l + 1), 3};
  const bool free = !contains_forest(w.graph, forest).found;
  rep.samples = 1;
  rep.details["witness"] = Json{{"construction", w.spec.describe()},
                                {"graph6", graph6_encode(w.graph)},
                                {"edges", w.graph.edge_count()},
                                {"forest_free", free}};
  rep.details["literal_exceeded"] = free && w.graph.edge_count() > r.literal_value;
  if (!free || w.graph.edge_count() != r.uniform_h) {
    rep.violate(Json{{"graph6", graph6_encode(w.graph)}, {"edges", w.graph.edge_count()}, {"forest_free", free}});
  }
  if (r.discrepancy) {
    rep.notes.push_back("literal h-branch value " + std::to_string(r.literal_value) +
                        " differs from uniform value " + std::to_string(r.uniform_value));
  }
  return rep;
}

}  // namespace pathturan
