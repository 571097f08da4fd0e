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

#include "metdim/extremal.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "metdim/error.hpp"
#include "metdim/metric.hpp"

namespace metdim {

namespace {

void check_params(std::size_t beta, Distance diameter, const char* op) {
  if (beta < 1 || diameter < 2) {
    throw PreconditionError(std::string(op) +
                            ": requires beta >= 1 and D >= 2");
  }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw PreconditionError("max_order: result overflows 64 bits");
  }
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw PreconditionError("max_order: result overflows 64 bits");
  }
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

// Saturating variants for the audit, where only comparisons matter.
std::uint64_t sat_pow(std::uint64_t base, std::size_t exp) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > kMax / base) return kMax;
    r *= base;
  }
  return r;
}

// Appends every vector with coordinate `fixed` = value and the others in
// [lo, hi], in lexicographic order; fixed == beta means no fixed coordinate.
void box(std::size_t beta, std::size_t fixed, int value, int lo, int hi,
         std::vector<LatticePoint>& out) {
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < beta; ++i) {
    if (i != fixed) free.push_back(i);
  }
  LatticePoint x{std::vector<int>(beta, lo)};
  if (fixed < beta) x.coords[fixed] = value;
  for (;;) {
    out.push_back(x);
    std::size_t j = free.size();
    while (j > 0 && x.coords[free[j - 1]] == hi) {
      x.coords[free[j - 1]] = lo;
      --j;
    }
    if (j == 0) return;
    ++x.coords[free[j - 1]];
  }
}

}  // namespace

Graph build_broom(std::size_t beta, Distance diameter) {
  check_params(beta, diameter, "build_broom");
  const std::size_t n = beta + diameter;
  GraphBuilder b(n);
  for (Vertex v = 1; v < diameter; ++v) b.add_edge(v - 1, v);
  for (std::size_t leaf = diameter; leaf < n; ++leaf) {
    b.add_edge(diameter - 1, static_cast<Vertex>(leaf));
  }
  return std::move(b).build();
}

std::uint64_t max_order(std::size_t beta, Distance diameter) {
  check_params(beta, diameter, "max_order");
  const std::uint64_t side = 2 * std::uint64_t{diameter} / 3 + 1;
  const std::uint64_t layers = (std::uint64_t{diameter} + 2) / 3;
  std::uint64_t tail = 0;
  for (std::uint64_t i = 1; i <= layers; ++i) {
    tail = checked_add(tail, checked_pow(2 * i - 1, beta - 1));
  }
  return checked_add(checked_pow(side, beta), checked_mul(beta, tail));
}

LatticeParams lattice_params(std::size_t beta, Distance diameter) {
  check_params(beta, diameter, "lattice_params");
  const int d = static_cast<int>(diameter);
  const int ceil3 = (d + 2) / 3;
  return {beta, diameter, ceil3, ceil3 + d / 3};
}

bool in_cube(const LatticeParams& p, const LatticePoint& x) {
  if (x.dim() != p.beta) return false;
  return std::all_of(x.coords.begin(), x.coords.end(), [&](int c) {
    return c >= p.a && c <= static_cast<int>(p.diameter);
  });
}

std::optional<std::pair<std::size_t, int>> pyramid_layer(
    const LatticeParams& p, const LatticePoint& x) {
  if (x.dim() != p.beta) return std::nullopt;
  for (std::size_t i = 0; i < p.beta; ++i) {
    const int r = x[i];
    if (r < 0 || r >= p.a) continue;
    bool inside = true;
    for (std::size_t j = 0; j < p.beta && inside; ++j) {
      inside = j == i || (x[j] >= p.b - r && x[j] <= p.b + r);
    }
    if (inside) return std::make_pair(i, r);
  }
  return std::nullopt;
}

std::optional<Vertex> MaxGraph::index_of(const LatticePoint& x) const {
  const auto it = std::lower_bound(points.begin(), points.end(), x);
  if (it == points.end() || *it != x) return std::nullopt;
  return static_cast<Vertex>(it - points.begin());
}

MaxGraph build_max_graph(std::size_t beta, Distance diameter) {
  const LatticeParams p = lattice_params(beta, diameter);
  std::vector<LatticePoint> pts;
  box(beta, beta, 0, p.a, static_cast<int>(diameter), pts);
  for (std::size_t i = 0; i < beta; ++i) {
    for (int r = 0; r < p.a; ++r) box(beta, i, r, p.b - r, p.b + r, pts);
  }
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
    throw Error("build_max_graph: cube and layers overlap");
  }
  if (pts.size() != max_order(beta, diameter)) {
    throw Error("build_max_graph: point count differs from max_order");
  }

  const std::size_t n = pts.size();
  auto locate = [&](const LatticePoint& x) -> std::optional<Vertex> {
    const auto it = std::lower_bound(pts.begin(), pts.end(), x);
    if (it == pts.end() || *it != x) return std::nullopt;
    return static_cast<Vertex>(it - pts.begin());
  };
  GraphBuilder builder(n);
  std::vector<int> offset(beta, -1);
  for (Vertex v = 0; v < n; ++v) {
    std::fill(offset.begin(), offset.end(), -1);
    for (;;) {
      LatticePoint y = pts[v];
      for (std::size_t i = 0; i < beta; ++i) y.coords[i] += offset[i];
      if (y > pts[v]) {
        if (auto w = locate(y)) builder.add_edge(v, *w);
      }
      std::size_t i = 0;
      while (i < beta && offset[i] == 1) offset[i++] = -1;
      if (i == beta) break;
      ++offset[i];
    }
  }

  std::vector<Vertex> basis;
  for (std::size_t i = 0; i < beta; ++i) {
    LatticePoint v{std::vector<int>(beta, p.b)};
    v.coords[i] = 0;
    const auto layer = pyramid_layer(p, v);
    const auto idx = locate(v);
    if (!layer || layer->first != i || layer->second != 0 || !idx) {
      throw Error("build_max_graph: basis vertex outside its layer");
    }
    basis.push_back(*idx);
  }
  MaxGraph mg{p, std::move(pts), std::move(builder).build(), basis};

  std::vector<std::vector<Distance>> rows;
  for (Vertex b : mg.basis) rows.push_back(bfs_distances(mg.graph, b));
  std::vector<std::vector<Distance>> coords(n, std::vector<Distance>(beta));
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < beta; ++i) coords[v][i] = rows[i][v];
  }
  std::sort(coords.begin(), coords.end());
  if (std::adjacent_find(coords.begin(), coords.end()) != coords.end()) {
    throw Error("build_max_graph: designated basis does not resolve");
  }
  return mg;
}

Distance linf_distance(const LatticePoint& x, const LatticePoint& y) {
  if (x.dim() != y.dim()) {
    throw PreconditionError("linf_distance: dimension mismatch");
  }
  int d = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return static_cast<Distance>(d);
}

LatticePoint step_toward(const LatticePoint& x, const LatticePoint& y) {
  if (x.dim() != y.dim()) {
    throw PreconditionError("step_toward: dimension mismatch");
  }
  if (x == y) throw PreconditionError("step_toward: points coincide");
  LatticePoint z = x;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i] < y[i]) {
      ++z.coords[i];
    } else if (x[i] > y[i]) {
      --z.coords[i];
    }
  }
  return z;
}

std::vector<std::vector<Distance>> basis_distances(const MaxGraph& mg) {
  const std::size_t n = mg.graph.order();
  std::vector<std::vector<Distance>> out(n, std::vector<Distance>(mg.basis.size()));
  for (std::size_t i = 0; i < mg.basis.size(); ++i) {
    const auto row = bfs_distances(mg.graph, mg.basis[i]);
    for (Vertex v = 0; v < n; ++v) out[v][i] = row[v];
  }
  return out;
}

bool upper_bound_audit(const Graph& g, std::span<const Vertex> s,
                       Distance k) {
  const DistanceMatrix dm(g);
  if (!dm.connected()) {
    throw PreconditionError("upper_bound_audit: graph is disconnected");
  }
  if (!resolves(dm, s)) {
    throw PreconditionError("upper_bound_audit: set does not resolve");
  }
  const Distance diam = dm.diameter();
  if (k > diam) {
    throw PreconditionError("upper_bound_audit: radius exceeds diameter");
  }
  std::uint64_t spheres = 0;
  bool ok = true;
  for (Vertex v : s) {
    std::vector<std::uint64_t> count(k + 1, 0);
    for (Distance d : dm.row(v)) {
      if (d <= k) ++count[d];
    }
    for (Distance i = 0; i <= k; ++i) {
      ok = ok && count[i] <= sat_pow(2 * std::uint64_t{i} + 1, s.size() - 1);
      spheres += count[i];
    }
  }
  const std::uint64_t far = sat_pow(diam - k, s.size());
  const std::uint64_t total =
      far > std::numeric_limits<std::uint64_t>::max() - spheres
          ? std::numeric_limits<std::uint64_t>::max()
          : far + spheres;
  return ok && g.order() <= total;
}

}  // namespace metdim
