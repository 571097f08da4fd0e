// Copyright 2026 The metdim Authors
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

#include "metdim/graph6.hpp"

#include <cstdint>
#include <sstream>

#include "metdim/error.hpp"

namespace metdim {

namespace {

constexpr int kBias = 63;
constexpr std::uint64_t kShortLimit = 62;
constexpr std::uint64_t kMediumLimit = 258047;

int sextet(std::string_view text, std::size_t offset) {
  if (offset >= text.size()) {
    throw ParseError("graph6: unexpected end of input", offset);
  }
  const int c = static_cast<unsigned char>(text[offset]);
  if (c < kBias || c > kBias + 63) {
    throw ParseError("graph6: byte out of range", offset);
  }
  return c - kBias;
}

void put_size(std::string& out, std::uint64_t n) {
  auto put_sextets = [&](int count) {
    for (int i = count - 1; i >= 0; --i) {
      out.push_back(static_cast<char>(((n >> (6 * i)) & 63U) + kBias));
    }
  };
  if (n <= kShortLimit) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= kMediumLimit) {
    out.push_back('~');
    put_sextets(3);
  } else {
    out.append("~~");
    put_sextets(6);
  }
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  if (text[0] != '~') {
    n = static_cast<std::uint64_t>(sextet(text, 0));
    pos = 1;
  } else if (text.size() > 1 && text[1] == '~') {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(text, i);
    if (n <= kMediumLimit) {
      throw ParseError("graph6: non-minimal size header", 0);
    }
    pos = 8;
  } else {
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(text, i);
    if (n <= kShortLimit) {
      throw ParseError("graph6: non-minimal size header", 0);
    }
    pos = 4;
  }
  if (n == 0) throw ParseError("graph6: graph has no vertices", 0);

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t body = (bits + 5) / 6;
  if (text.size() - pos < body) {
    throw ParseError("graph6: truncated edge data", text.size());
  }
  if (text.size() - pos > body) {
    throw ParseError("graph6: trailing bytes", pos + body);
  }

  GraphBuilder builder(n);
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + k / 6;
      const int value = sextet(text, at);
      if ((value >> (5 - k % 6)) & 1) builder.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (sextet(text, last) & pad_mask) {
      throw ParseError("graph6: nonzero padding bits", last);
    }
  }
  return std::move(builder).build();
}

std::string serialize_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  put_size(out, n);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  }
  return out;
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace metdim
