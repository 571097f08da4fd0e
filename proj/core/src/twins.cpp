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

#include "metdim/twins.hpp"

#include <string>
#include <unordered_map>

#include "metdim/error.hpp"

namespace metdim {

namespace {

std::uint64_t hash_row(std::span<const Word> row, Vertex self, bool closed) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::size_t w = 0; w < row.size(); ++w) {
    Word x = row[w];
    if (closed && self / kWordBits == w) x |= Word{1} << (self % kWordBits);
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool same_open(const Graph& g, Vertex u, Vertex v) {
  const auto ru = g.row(u);
  const auto rv = g.row(v);
  for (std::size_t w = 0; w < ru.size(); ++w) {
    if (ru[w] != rv[w]) return false;
  }
  return true;
}

bool same_closed(const Graph& g, Vertex u, Vertex v) {
  const auto ru = g.row(u);
  const auto rv = g.row(v);
  for (std::size_t w = 0; w < ru.size(); ++w) {
    Word a = ru[w];
    Word b = rv[w];
    if (u / kWordBits == w) {
      a |= Word{1} << (u % kWordBits);
      b |= Word{1} << (u % kWordBits);
    }
    if (v / kWordBits == w) {
      a |= Word{1} << (v % kWordBits);
      b |= Word{1} << (v % kWordBits);
    }
    if (a != b) return false;
  }
  return true;
}

TwinRelation relation(const Graph& g, Vertex u, Vertex v) {
  if (g.adjacent(u, v)) {
    return same_closed(g, u, v) ? TwinRelation::kAdjacentTwins
                                : TwinRelation::kNotTwins;
  }
  return same_open(g, u, v) ? TwinRelation::kNonAdjacentTwins
                            : TwinRelation::kNotTwins;
}

void require_connected(const Graph& g, const char* op) {
  if (!is_connected(g)) {
    throw PreconditionError(std::string(op) + ": graph is disconnected");
  }
}

}  // namespace

char kind_symbol(ClassKind k) {
  switch (k) {
    case ClassKind::kSingleton:
      return '1';
    case ClassKind::kClique:
      return 'K';
    case ClassKind::kNull:
      return 'N';
  }
  return '?';
}

std::size_t TwinGraph::alpha() const {
  std::size_t a = 0;
  for (const auto& c : classes) a += is_kn(c.kind) ? 1 : 0;
  return a;
}

TwinRelation are_twins(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order()) {
    throw PreconditionError("are_twins: vertex out of range");
  }
  if (u == v) throw PreconditionError("are_twins: vertices must be distinct");
  return relation(g, u, v);
}

std::vector<TwinClass> twin_partition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<TwinClass> classes;
  // Each class is registered under the open and closed neighbourhood hash of
  // its least member; twins of that member hit one of the two buckets.
  std::unordered_multimap<std::uint64_t, std::size_t> open_index;
  std::unordered_multimap<std::uint64_t, std::size_t> closed_index;
  for (Vertex v = 0; v < n; ++v) {
    const std::uint64_t ho = hash_row(g.row(v), v, false);
    const std::uint64_t hc = hash_row(g.row(v), v, true);
    std::size_t found = classes.size();
    for (auto [it, end] = open_index.equal_range(ho); it != end; ++it) {
      const Vertex rep = classes[it->second].members.front();
      if (!g.adjacent(rep, v) && same_open(g, rep, v)) {
        found = it->second;
        break;
      }
    }
    if (found == classes.size()) {
      for (auto [it, end] = closed_index.equal_range(hc); it != end; ++it) {
        const Vertex rep = classes[it->second].members.front();
        if (g.adjacent(rep, v) && same_closed(g, rep, v)) {
          found = it->second;
          break;
        }
      }
    }
    if (found == classes.size()) {
      classes.push_back({{v}, ClassKind::kSingleton});
      open_index.emplace(ho, found);
      closed_index.emplace(hc, found);
    } else {
      TwinClass& c = classes[found];
      c.kind = g.adjacent(c.members.front(), v) ? ClassKind::kClique
                                                : ClassKind::kNull;
      c.members.push_back(v);
    }
  }
  return classes;
}

TwinGraph twin_graph(const Graph& g) {
  auto classes = twin_partition(g);
  std::vector<std::uint32_t> class_of(g.order());
  for (std::uint32_t c = 0; c < classes.size(); ++c) {
    for (Vertex v : classes[c].members) class_of[v] = c;
  }
  GraphBuilder q(classes.size());
  for (Vertex a = 0; a < classes.size(); ++a) {
    for_each_bit(g.row(classes[a].members.front()), [&](Vertex w) {
      const Vertex b = class_of[w];
      if (b > a) q.add_edge(a, b);
    });
  }
  return {std::move(classes), std::move(class_of), std::move(q).build()};
}

DiameterRelation quotient_diameter_relation(const Graph& g) {
  if (g.order() == 1) {
    throw PreconditionError("quotient_diameter_relation: K_1 is excluded");
  }
  require_connected(g, "quotient_diameter_relation");
  const Distance d = diameter(g);
  const Distance dq = diameter(twin_graph(g).quotient);
  return {d, dq, dq < d};
}

TwinReduction reduce_twins(const Graph& g) {
  require_connected(g, "reduce_twins");
  std::vector<bool> drop(g.order(), false);
  std::size_t delta = 0;
  for (const auto& c : twin_partition(g)) {
    for (std::size_t i = 2; i < c.members.size(); ++i) {
      drop[c.members[i]] = true;
      ++delta;
    }
  }
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!drop[v]) kept.push_back(v);
  }
  Graph reduced = g.induced_subgraph(kept);
  return {std::move(reduced), delta, std::move(kept)};
}

}  // namespace metdim
