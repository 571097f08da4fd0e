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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace metdim {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

// Undirected simple graph on vertices 0..n-1 with n >= 1.
//
// Adjacency is stored as one bit row per vertex so that neighbourhood
// comparisons and row scans touch n/64 machine words. Instances are immutable;
// use GraphBuilder to construct one. Immutable graphs may be shared freely
// between threads.
class Graph {
 public:
  // Edgeless graph on `n` vertices. Throws PreconditionError if n == 0.
  explicit Graph(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (bits_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  std::span<const Word> row(Vertex v) const noexcept {
    return {bits_.data() + v * words_, words_};
  }

  std::size_t degree(Vertex v) const noexcept;
  std::vector<Vertex> neighbours(Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // Subgraph induced by `keep` (which must be strictly increasing); vertex
  // keep[i] becomes vertex i.
  Graph induced_subgraph(std::span<const Vertex> keep) const;

  // Relabelled copy in which old vertex v becomes perm[v].
  Graph permuted(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::size_t n_;
  std::size_t words_;
  std::size_t edges_ = 0;
  std::vector<Word> bits_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : graph_(n) {}

  // Adds edge uv. Self-loops and out-of-range endpoints throw
  // PreconditionError; repeated edges are ignored.
  GraphBuilder& add_edge(Vertex u, Vertex v);

  std::size_t order() const noexcept { return graph_.order(); }
  bool has_edge(Vertex u, Vertex v) const noexcept {
    return graph_.adjacent(u, v);
  }

  Graph build() && { return std::move(graph_); }
  Graph build() const& { return graph_; }

 private:
  Graph graph_;
};

// Helpers for iterating the set bits of a row.
template <typename Fn>
void for_each_bit(std::span<const Word> row, Fn&& fn) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    Word bits = row[w];
    while (bits != 0) {
      const int bit = __builtin_ctzll(bits);
      fn(static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(bit)));
      bits &= bits - 1;
    }
  }
}

}  // namespace metdim
