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
#include <string>
#include <string_view>

#include "pathturan/constructions.hpp"
#include "pathturan/errors.hpp"
#include "pathturan/graph.hpp"

namespace pathturan {

/// Largest order graph6 can express (36 bits of header payload would allow
/// more, but the 4-byte form with 18 bits is all we emit or accept).
inline constexpr std::size_t kGraph6MaxOrder = 258047;

/// Standard graph6: header, then x(0,1), x(0,2), x(1,2), x(0,3), .. in
/// 6-bit groups offset by 63.
inline std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  require(n <= kGraph6MaxOrder, "graph6_encode: order too large");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int value = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + 63));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
  return out;
}

/// Decodes one graph6 line. A trailing newline is accepted; anything else
/// malformed throws ParseError carrying the offending byte offset.
inline Graph graph6_decode(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  auto sextet = [&](std::size_t pos) -> int {
    if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range 63..126", pos);
    return c - 63;
  };
  std::size_t pos = 0;
  std::size_t n = 0;
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  if (text[0] == '~') {
    if (text.size() > 1 && text[1] == '~') throw ParseError("graph6: 8-byte order header is not supported", 1);
    n = (static_cast<std::size_t>(sextet(1)) << 12) | (static_cast<std::size_t>(sextet(2)) << 6) |
        static_cast<std::size_t>(sextet(3));
    if (n <= 62) throw ParseError("graph6: long header used for a small order", 0);
    pos = 4;
  } else {
    n = static_cast<std::size_t>(sextet(0));
    pos = 1;
  }
  const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t groups = (pairs + 5) / 6;
  if (text.size() != pos + groups) {
    throw ParseError("graph6: expected " + std::to_string(groups) + " data bytes, got " +
                         std::to_string(text.size() > pos ? text.size() - pos : 0),
                     std::min(text.size(), pos + groups));
  }
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int group = sextet(pos + bit / 6);
      if ((group >> (5 - bit % 6)) & 1) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (pairs % 6 != 0) {
    const std::size_t last = pos + groups - 1;
    const int pad_mask = (1 << (6 - pairs % 6)) - 1;
    if (sextet(last) & pad_mask) throw ParseError("graph6: padding bits must be zero", last);
  }
  return g;
}

/// Undirected DOT, one edge per line. When a spec is given, each node line
/// carries its role as a comment.
inline std::string to_dot(const Graph& g, const ConstructionSpec* spec = nullptr) {
  std::string out = "graph G {\n";
  for (std::size_t v = 0; v < g.order(); ++v) {
    out += "  " + std::to_string(v) + ";";
    if (spec && v < spec->roles.size()) out += "  // " + spec->role(static_cast<Vertex>(v));
    out += '\n';
  }
  for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace pathturan
