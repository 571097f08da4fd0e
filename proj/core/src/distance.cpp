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

#include "metdim/distance.hpp"

#include <algorithm>
#include <string>

#include "metdim/error.hpp"

namespace metdim {

namespace {

// Level-synchronous BFS over bit rows. `out` must have g.order() entries.
void bfs_into(const Graph& g, Vertex source, std::span<Distance> out) {
  const std::size_t n = g.order();
  const std::size_t words = g.words_per_row();
  std::fill(out.begin(), out.end(), static_cast<Distance>(n));
  std::vector<Word> unvisited(words, ~Word{0});
  if (n % kWordBits != 0) unvisited.back() = (Word{1} << (n % kWordBits)) - 1;
  std::vector<Vertex> frontier{source};
  std::vector<Vertex> next;
  std::vector<Word> reach(words);
  unvisited[source / kWordBits] &= ~(Word{1} << (source % kWordBits));
  out[source] = 0;
  Distance level = 0;
  while (!frontier.empty()) {
    ++level;
    std::fill(reach.begin(), reach.end(), 0);
    for (Vertex v : frontier) {
      const auto r = g.row(v);
      for (std::size_t w = 0; w < words; ++w) reach[w] |= r[w];
    }
    for (std::size_t w = 0; w < words; ++w) {
      reach[w] &= unvisited[w];
      unvisited[w] &= ~reach[w];
    }
    next.clear();
    for_each_bit(reach, [&](Vertex v) {
      out[v] = level;
      next.push_back(v);
    });
    frontier.swap(next);
  }
}

}  // namespace

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.order()), dist_(n_ * n_) {
  for (Vertex v = 0; v < n_; ++v) {
    bfs_into(g, v, std::span<Distance>(dist_.data() + v * n_, n_));
  }
  for (Distance d : dist_) {
    if (d == infinity()) {
      connected_ = false;
      diameter_ = infinity();
      return;
    }
    diameter_ = std::max(diameter_, d);
  }
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.order()) {
    throw PreconditionError("bfs source out of range: " +
                            std::to_string(source));
  }
  std::vector<Distance> out(g.order());
  bfs_into(g, source, out);
  return out;
}

bool is_connected(const Graph& g) {
  const auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [&](Distance x) {
    return x == static_cast<Distance>(g.order());
  });
}

Distance diameter(const Graph& g) { return DistanceMatrix(g).diameter(); }

Distance eccentricity(const Graph& g, Vertex v) {
  const auto d = bfs_distances(g, v);
  const Distance ecc = *std::max_element(d.begin(), d.end());
  if (ecc == static_cast<Distance>(g.order())) {
    throw PreconditionError("eccentricity: graph is disconnected");
  }
  return ecc;
}

}  // namespace metdim
