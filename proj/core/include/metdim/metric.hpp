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
#include <span>
#include <vector>

#include "metdim/distance.hpp"
#include "metdim/graph.hpp"

namespace metdim {

// A metric basis and its size. For K_1 the result is beta = 0 with an empty
// witness: the empty set trivially distinguishes the single vertex.
struct MetricBasisResult {
  std::size_t beta;
  std::vector<Vertex> witness;  // increasing
};

// Does x resolve the pair v, w, i.e. dist(v,x) != dist(w,x)?
bool pair_resolved_by(const DistanceMatrix& dm, Vertex v, Vertex w, Vertex x);

// True iff the distance vectors to `s` (in the given order) are pairwise
// distinct. Throws PreconditionError on a disconnected graph or an
// out-of-range vertex.
bool resolves(const DistanceMatrix& dm, std::span<const Vertex> s);

// True iff every pair inside `s` is resolved by some vertex outside `s`;
// equivalent to resolves(V \ s).
bool complement_resolves(const DistanceMatrix& dm, std::span<const Vertex> s);

// Distance vectors of every vertex with respect to `s`.
std::vector<std::vector<Distance>> metric_coordinates(
    const DistanceMatrix& dm, std::span<const Vertex> s);

// Sum over twin classes of (|class| - 1): every resolving set contains all but
// at most one member of each class.
std::size_t twin_lower_bound(const Graph& g);

struct SolverOptions {
  unsigned jobs = 1;
};

// Exact metric dimension. Candidate sets are enumerated by increasing size
// from max(1, twin_lower_bound) in lexicographic order, skipping sets that
// miss a twin obligation; the witness is the lexicographically least minimum
// resolving set regardless of `jobs`.
MetricBasisResult metric_dimension(const Graph& g, const SolverOptions& opts = {});
MetricBasisResult metric_dimension(const Graph& g, const DistanceMatrix& dm,
                                   const SolverOptions& opts = {});

inline constexpr std::size_t kBruteForceCap = 16;

// Unpruned subset sweep with pairwise vector comparison. Intended as an
// independent oracle; throws PreconditionError for n > cap.
MetricBasisResult brute_force_dimension(const Graph& g,
                                        std::size_t cap = kBruteForceCap);

}  // namespace metdim
