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

#include "metdim/graph.hpp"

#include <bit>
#include <string>

#include "metdim/error.hpp"

namespace metdim {

Graph::Graph(std::size_t n) : n_(n), words_((n + kWordBits - 1) / kWordBits) {
  if (n == 0) throw PreconditionError("graph must have at least one vertex");
  bits_.assign(n_ * words_, 0);
}

std::size_t Graph::degree(Vertex v) const noexcept {
  std::size_t d = 0;
  for (Word w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<Vertex> Graph::neighbours(Vertex v) const {
  std::vector<Vertex> out;
  for_each_bit(row(v), [&](Vertex w) { out.push_back(w); });
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < n_; ++u) {
    for_each_bit(row(u), [&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

Graph Graph::induced_subgraph(std::span<const Vertex> keep) const {
  std::vector<Vertex> position(n_, static_cast<Vertex>(n_));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= n_ || (i > 0 && keep[i] <= keep[i - 1])) {
      throw PreconditionError("induced_subgraph: vertex list must be "
                              "strictly increasing and in range");
    }
    position[keep[i]] = static_cast<Vertex>(i);
  }
  GraphBuilder builder(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for_each_bit(row(keep[i]), [&](Vertex w) {
      if (position[w] < n_ && position[w] > i) {
        builder.add_edge(static_cast<Vertex>(i), position[w]);
      }
    });
  }
  return std::move(builder).build();
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  if (perm.size() != n_) {
    throw PreconditionError("permuted: permutation has wrong length");
  }
  std::vector<bool> seen(n_, false);
  for (Vertex p : perm) {
    if (p >= n_ || seen[p]) {
      throw PreconditionError("permuted: not a permutation");
    }
    seen[p] = true;
  }
  GraphBuilder builder(n_);
  for (const auto& [u, v] : edges()) builder.add_edge(perm[u], perm[v]);
  return std::move(builder).build();
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  const std::size_t n = graph_.n_;
  if (u >= n || v >= n) {
    throw PreconditionError("edge endpoint out of range: " +
                            std::to_string(u) + "-" + std::to_string(v));
  }
  if (u == v) {
    throw PreconditionError("self-loop at vertex " + std::to_string(u));
  }
  if (graph_.adjacent(u, v)) return *this;
  const std::size_t words = graph_.words_;
  graph_.bits_[u * words + v / kWordBits] |= Word{1} << (v % kWordBits);
  graph_.bits_[v * words + u / kWordBits] |= Word{1} << (u % kWordBits);
  ++graph_.edges_;
  return *this;
}

}  // namespace metdim
