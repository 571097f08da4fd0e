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
#include <vector>

#include "metdim/distance.hpp"
#include "metdim/graph.hpp"

namespace metdim {

// Adjacent twins share closed neighbourhoods N[u] = N[v]; non-adjacent twins
// share open neighbourhoods N(u) = N(v). At most one of the two can hold.
enum class TwinRelation { kNotTwins, kAdjacentTwins, kNonAdjacentTwins };

// Type of a twin class: (1) singleton, (K) clique of size >= 2, (N) null
// graph of size >= 2. The compound types (1K), (1N), (KN) are predicates.
enum class ClassKind { kSingleton, kClique, kNull };

inline bool is_1k(ClassKind k) { return k != ClassKind::kNull; }
inline bool is_1n(ClassKind k) { return k != ClassKind::kClique; }
inline bool is_kn(ClassKind k) { return k != ClassKind::kSingleton; }
char kind_symbol(ClassKind k);  // '1', 'K' or 'N'

struct TwinClass {
  std::vector<Vertex> members;  // increasing
  ClassKind kind;

  std::size_t size() const { return members.size(); }
};

// Quotient by the twin relation. Quotient vertex i is classes[i]; classes are
// ordered by least member.
struct TwinGraph {
  std::vector<TwinClass> classes;
  std::vector<std::uint32_t> class_of;  // vertex -> class index
  Graph quotient;

  // Number of classes of type (K) or (N).
  std::size_t alpha() const;
};

// Throws PreconditionError if u == v or either is out of range.
TwinRelation are_twins(const Graph& g, Vertex u, Vertex v);

std::vector<TwinClass> twin_partition(const Graph& g);
TwinGraph twin_graph(const Graph& g);

struct DiameterRelation {
  Distance diameter;           // diam(G)
  Distance quotient_diameter;  // diam(G*)
  bool collapsed;              // diam(G*) < diam(G)
};

// Requires g connected and g != K_1.
DiameterRelation quotient_diameter_relation(const Graph& g);

struct TwinReduction {
  Graph reduced;
  std::size_t delta;          // vertices removed
  std::vector<Vertex> kept;   // original index of each reduced vertex
};

// Shrinks every twin class of size >= 3 to its two least members, so that
// beta(g) = beta(reduced) + delta. Requires g connected.
TwinReduction reduce_twins(const Graph& g);

}  // namespace metdim
