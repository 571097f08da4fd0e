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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "metdim/distance.hpp"
#include "metdim/graph.hpp"

namespace metdim {

// Path v_0 .. v_{D-1} with `beta` extra leaves (indices D .. D+beta-1)
// hanging off v_{D-1}. Order beta + D, diameter D, metric dimension beta.
// Requires beta >= 1 and D >= 2.
Graph build_broom(std::size_t beta, Distance diameter);

// Largest order of a connected graph with metric dimension beta and diameter
// D >= 2:  (floor(2D/3) + 1)^beta + beta * sum_{i=1}^{ceil(D/3)} (2i-1)^(beta-1).
// Throws PreconditionError for beta < 1, D < 2, or on 64-bit overflow.
std::uint64_t max_order(std::size_t beta, Distance diameter);

struct LatticePoint {
  std::vector<int> coords;

  std::size_t dim() const { return coords.size(); }
  int operator[](std::size_t i) const { return coords[i]; }
  auto operator<=>(const LatticePoint&) const = default;
};

// Block boundaries of the extremal lattice: cube = [A, D]^beta and layers
// P_{i,r} = {x : x_i = r, x_j in [B - r, B + r] for j != i}, r in [0, A-1],
// with A = ceil(D/3) and B = ceil(D/3) + floor(D/3).
struct LatticeParams {
  std::size_t beta;
  Distance diameter;
  int a;
  int b;
};

LatticeParams lattice_params(std::size_t beta, Distance diameter);
bool in_cube(const LatticeParams& p, const LatticePoint& x);
// (i, r) with x in P_{i,r}, if any.
std::optional<std::pair<std::size_t, int>> pyramid_layer(
    const LatticeParams& p, const LatticePoint& x);

// The extremal graph: points of cube and layers in lexicographic order,
// adjacent when distinct and every coordinate differs by at most one.
// basis[i] is the vertex (B, .., B, 0, B, .., B) with the 0 at position i.
struct MaxGraph {
  LatticeParams params;
  std::vector<LatticePoint> points;
  Graph graph;
  std::vector<Vertex> basis;

  std::optional<Vertex> index_of(const LatticePoint& x) const;
};

// Builds and self-checks the construction (disjoint blocks, order equal to
// max_order, basis resolves); throws Error if a check fails. Requires
// beta >= 1 and D >= 2.
MaxGraph build_max_graph(std::size_t beta, Distance diameter);

// max_i |x_i - y_i|.
Distance linf_distance(const LatticePoint& x, const LatticePoint& y);

// Moves every coordinate of x one unit toward y. Throws PreconditionError if
// x == y or the dimensions differ.
LatticePoint step_toward(const LatticePoint& x, const LatticePoint& y);

// BFS distance from every vertex to each basis vertex: row v, column i.
std::vector<std::vector<Distance>> basis_distances(const MaxGraph& mg);

// Checks the sphere-counting bound for resolving set s and radius k:
// |N_i(v)| <= (2i+1)^(|s|-1) for v in s, i <= k, and
// |V| <= (D-k)^|s| + sum_{v in s} sum_{i<=k} |N_i(v)|.
// Requires g connected, s resolving and 0 <= k <= diam(g).
bool upper_bound_audit(const Graph& g, std::span<const Vertex> s,
                       Distance k);

}  // namespace metdim
