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
#include <vector>

#include "metdim/graph.hpp"

namespace metdim {

using Distance = std::uint32_t;

// Hop-count distances. Unreachable entries hold the sentinel value n (one
// past the largest possible finite distance), so a row is a flat array and
// `d == infinity()` tests reachability.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  std::size_t order() const noexcept { return n_; }
  Distance infinity() const noexcept { return static_cast<Distance>(n_); }
  bool connected() const noexcept { return connected_; }

  Distance operator()(Vertex u, Vertex v) const noexcept {
    return dist_[u * n_ + v];
  }
  std::span<const Distance> row(Vertex v) const noexcept {
    return {dist_.data() + v * n_, n_};
  }

  // Largest finite entry if connected, infinity() otherwise.
  Distance diameter() const noexcept { return diameter_; }

 private:
  std::size_t n_;
  std::vector<Distance> dist_;
  Distance diameter_ = 0;
  bool connected_ = true;
};

// Single-source BFS; unreachable vertices get the sentinel g.order().
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

inline DistanceMatrix all_pairs(const Graph& g) { return DistanceMatrix(g); }

bool is_connected(const Graph& g);

// Diameter, or g.order() (the infinity sentinel) when g is disconnected.
Distance diameter(const Graph& g);

// Throws PreconditionError if g is disconnected or v is out of range.
Distance eccentricity(const Graph& g, Vertex v);

}  // namespace metdim
