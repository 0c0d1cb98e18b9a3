// Copyright 2026 The Authors.
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

// graph6: a length header followed by the upper triangle of the adjacency
// matrix, column by column ((0,1), (0,2), (1,2), (0,3), ...), packed six
// bits per byte, big-endian, each byte offset by 63.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rigspec/graph.hpp"

namespace rigspec {

namespace {

constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

// Largest order accepted on input. The format allows 36-bit orders, but the
// dense adjacency matrix makes anything beyond this impractical.
constexpr std::int64_t kMaxOrder = 1 << 16;

int sextet(char c) {
  int value = static_cast<unsigned char>(c) - kOffset;
  if (value < 0 || value > 63) {
    throw Graph6Error("graph6: byte out of range 63..126");
  }
  return value;
}

std::int64_t read_order(std::string_view& s) {
  if (s.empty()) throw Graph6Error("graph6: empty input");
  if (s[0] != '~') {
    int n = sextet(s[0]);
    s.remove_prefix(1);
    return n;
  }
  auto take = [&](size_t count, size_t skip) {
    if (s.size() < skip + count) {
      throw Graph6Error("graph6: truncated length header");
    }
    std::int64_t n = 0;
    for (size_t k = 0; k < count; ++k) n = (n << 6) | sextet(s[skip + k]);
    s.remove_prefix(skip + count);
    return n;
  };
  std::int64_t n;
  if (s.size() >= 2 && s[1] == '~') {
    n = take(6, 2);
    if (n <= 258047) throw Graph6Error("graph6: non-canonical length header");
  } else {
    n = take(3, 1);
    if (n <= 62) throw Graph6Error("graph6: non-canonical length header");
  }
  return n;
}

void write_order(std::string& out, std::int64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
    return;
  }
  int sextets = 3;
  if (n <= 258047) {
    out.push_back('~');
  } else {
    out.append("~~");
    sextets = 6;
  }
  for (int k = sextets - 1; k >= 0; --k) {
    out.push_back(static_cast<char>(((n >> (6 * k)) & 63) + kOffset));
  }
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  std::int64_t n = read_order(line);
  if (n > kMaxOrder) throw Graph6Error("graph6: order too large");

  const std::int64_t bits = n * (n - 1) / 2;
  const std::int64_t body = (bits + 5) / 6;
  if (static_cast<std::int64_t>(line.size()) != body) {
    throw Graph6Error(static_cast<std::int64_t>(line.size()) < body
                          ? "graph6: truncated adjacency data"
                          : "graph6: trailing bytes after adjacency data");
  }

  std::vector<Edge> edges;
  std::int64_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      int byte = sextet(line[k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({u, v});
    }
  }
  if (bits % 6 != 0) {
    int last = sextet(line.back());
    int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) {
      throw Graph6Error("graph6: nonzero padding bits");
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
  const std::int64_t n = g.order();
  std::string out;
  write_order(out, n);
  const std::int64_t bits = n * (n - 1) / 2;
  std::string body(static_cast<size_t>((bits + 5) / 6), 0);
  for (const Edge& e : g.edges()) {
    std::int64_t k = static_cast<std::int64_t>(e.v) * (e.v - 1) / 2 + e.u;
    body[k / 6] = static_cast<char>(body[k / 6] | (1 << (5 - k % 6)));
  }
  for (char& c : body) c = static_cast<char>(c + kOffset);
  return out + body;
}

}  // namespace rigspec
