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

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pathturan/errors.hpp"

namespace pathturan {

/// Vertex-disjoint union of paths P_{k1} u P_{k2} u ..., stored as the
/// non-increasing list of path orders (vertex counts). Order 2 is a single
/// edge, so the matching M_t is t copies of 2.
class PathForest {
 public:
  PathForest() = default;

  /// Accepts the orders in any sequence and stores them non-increasing.
  explicit PathForest(std::vector<int> orders) : orders_(std::move(orders)) {
    require(!orders_.empty(), "path forest must have at least one path");
    for (int k : orders_) require(k >= 2, "path orders must be >= 2, got " + std::to_string(k));
    std::sort(orders_.begin(), orders_.end(), std::greater<>());
  }

  PathForest(std::initializer_list<int> orders) : PathForest(std::vector<int>(orders)) {}

  static PathForest matching(int t) {
    require(t >= 1, "matching size must be >= 1");
    return PathForest(std::vector<int>(static_cast<std::size_t>(t), 2));
  }

  /// Parses "5,5" or "7,5,3".
  static PathForest parse(std::string_view text) {
    std::vector<int> orders;
    std::string item;
    std::stringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        const int k = std::stoi(item, &used);
        require(used == item.size(), "bad path order '" + item + "'");
        orders.push_back(k);
      } catch (const std::logic_error&) {
        throw UsageError("bad path order '" + item + "' in forest '" + std::string(text) + "'");
      }
    }
    return PathForest(std::move(orders));
  }

  const std::vector<int>& orders() const { return orders_; }
  std::size_t size() const { return orders_.size(); }
  int largest() const { return orders_.front(); }
  int total_order() const { return std::accumulate(orders_.begin(), orders_.end(), 0); }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(orders_[i]);
    }
    return s;
  }

  bool operator==(const PathForest&) const = default;

 private:
  std::vector<int> orders_;
};

}  // namespace pathturan
