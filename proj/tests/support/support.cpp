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

#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace metdim::testing {

Graph random_connected(std::size_t n, double p, Rng& rng) {
  GraphBuilder b(n);
  std::bernoulli_distribution coin(p);
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    b.add_edge(parent(rng), v);
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  const auto perm = random_permutation(n, rng);
  return std::move(b).build().permuted(perm);
}

Graph planted_twins(std::size_t n, Rng& rng) {
  std::uniform_int_distribution<std::size_t> base_size(
      2, std::max<std::size_t>(2, n - 2));
  const std::size_t m = base_size(rng);
  const Graph base = random_connected(m, 0.3, rng);
  GraphBuilder b(n);
  for (const auto& [u, v] : base.edges()) b.add_edge(u, v);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(m - 1));
  std::bernoulli_distribution coin(0.5);
  // The first two clones share a source and a kind, so a class of size >= 3
  // is always present. Copying the source's current row keeps earlier
  // clones consistent.
  const Vertex big = pick(rng);
  const bool big_adjacent = coin(rng);
  for (Vertex v = static_cast<Vertex>(m); v < n; ++v) {
    const bool first_two = v < m + 2;
    const Vertex src = first_two ? big : pick(rng);
    const bool adjacent = first_two ? big_adjacent : coin(rng);
    for (Vertex w = 0; w < v; ++w) {
      if (w == src ? adjacent : b.has_edge(src, w)) b.add_edge(v, w);
    }
  }
  const auto perm = random_permutation(n, rng);
  return std::move(b).build().permuted(perm);
}

std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

std::vector<std::vector<std::uint32_t>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.order();
  const auto inf = static_cast<std::uint32_t>(n);
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
  for (Vertex v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex w = 0; w < n; ++w) {
      if (g.adjacent(v, w)) d[v][w] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] < inf && d[k][j] < inf) {
          d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        }
      }
    }
  }
  return d;
}

bool oracle_resolves(const std::vector<std::vector<std::uint32_t>>& d,
                     std::span<const Vertex> s) {
  const std::size_t n = d.size();
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = v + 1; w < n; ++w) {
      bool split = false;
      for (Vertex x : s) split = split || d[v][x] != d[w][x];
      if (!split) return false;
    }
  }
  return true;
}

std::size_t oracle_beta(const Graph& g) {
  const auto d = floyd_warshall(g);
  for (std::size_t k = 0; k <= g.order(); ++k) {
    bool found = false;
    for_each_subset(g.order(), k, [&](std::span<const Vertex> s) {
      found = oracle_resolves(d, s);
      return !found;
    });
    if (found) return k;
  }
  return g.order();
}

std::uint64_t oracle_canonical_code(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> at(n);
  std::iota(at.begin(), at.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        code = (code << 1) | (g.adjacent(at[i], at[j]) ? 1U : 0U);
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(at.begin(), at.end()));
  return best;
}

}  // namespace metdim::testing
