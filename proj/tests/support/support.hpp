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
#include <random>
#include <span>
#include <vector>

#include "metdim/graph.hpp"

// Test-only generators and oracles. The oracles share no code with the
// library beyond the Graph container.
namespace metdim::testing {

using Rng = std::mt19937_64;

// Random spanning tree plus each remaining pair with probability p.
Graph random_connected(std::size_t n, double p, Rng& rng);

// Random connected base graph whose vertices are then cloned as adjacent or
// non-adjacent twins until the order reaches n. At least one class of size
// >= 3 is planted.
Graph planted_twins(std::size_t n, Rng& rng);

// Uniform random relabelling.
std::vector<Vertex> random_permutation(std::size_t n, Rng& rng);

// Floyd-Warshall; unreachable pairs hold n.
std::vector<std::vector<std::uint32_t>> floyd_warshall(const Graph& g);

// Pairwise comparison of distance vectors.
bool oracle_resolves(const std::vector<std::vector<std::uint32_t>>& d,
                     std::span<const Vertex> s);

// Smallest resolving set size by increasing-size subset sweep.
std::size_t oracle_beta(const Graph& g);

// Least graph6 edge bit-string over all n! labellings (n <= 8).
std::uint64_t oracle_canonical_code(const Graph& g);

// Calls fn on every size-k subset of {0..n-1}, lexicographically, until fn
// returns false.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<Vertex> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = static_cast<Vertex>(i);
  for (;;) {
    if (!fn(std::span<const Vertex>(s))) return;
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace metdim::testing
