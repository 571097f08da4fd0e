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

#include "metdim/characterize.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "metdim/error.hpp"

namespace metdim {

namespace {

constexpr std::array<std::string_view, 9> kAcceptLabels = {
    "D1", "D2-P2", "D2-P3", "1a", "1b", "1c", "1d", "2", "3"};

// Walks a path component starting at `start` inside the quotient minus
// `skip`. Returns the visited sequence.
std::vector<std::uint32_t> walk(const Graph& q, std::uint32_t start,
                                std::optional<std::uint32_t> skip) {
  std::vector<std::uint32_t> seq{start};
  std::optional<std::uint32_t> prev;
  std::uint32_t cur = start;
  while (seq.size() <= q.order()) {
    std::optional<std::uint32_t> step;
    for (Vertex v : q.neighbours(cur)) {
      if ((skip && v == *skip) || (prev && v == *prev)) continue;
      step = v;
      break;
    }
    if (!step) break;
    prev = cur;
    cur = *step;
    seq.push_back(cur);
  }
  return seq;
}

// If q minus `skip` is a path on exactly `len` vertices, returns it read from
// the endpoint with the smaller index.
std::optional<std::vector<std::uint32_t>> as_path(
    const Graph& q, std::optional<std::uint32_t> skip, std::size_t len) {
  std::vector<std::uint32_t> ends;
  std::size_t edges = 0;
  for (Vertex v = 0; v < q.order(); ++v) {
    if (skip && v == *skip) continue;
    std::size_t d = q.degree(v) - (skip && q.adjacent(v, *skip) ? 1 : 0);
    if (d > 2 || d == 0) return std::nullopt;
    if (d == 1) ends.push_back(v);
    edges += d;
  }
  if (ends.size() != 2 || edges / 2 + 1 != len) return std::nullopt;
  auto seq = walk(q, ends[0], skip);
  if (seq.size() != len || seq.back() != ends[1]) return std::nullopt;
  return seq;
}

bool shape_before(const QuotientShape& a, const QuotientShape& b) {
  return std::tie(a.k, a.spine) < std::tie(b.k, b.spine);
}

// Every class other than those listed is a singleton.
bool others_singleton(const TwinGraph& tg,
                      std::initializer_list<std::uint32_t> allowed) {
  for (std::uint32_t c = 0; c < tg.classes.size(); ++c) {
    if (std::find(allowed.begin(), allowed.end(), c) != allowed.end()) {
      continue;
    }
    if (tg.classes[c].kind != ClassKind::kSingleton) return false;
  }
  return true;
}

std::optional<std::string_view> path_case(const TwinGraph& tg,
                                          const QuotientShape& shape,
                                          Distance diam) {
  std::vector<std::size_t> marked;  // spine positions not of type (1)
  for (std::size_t i = 0; i < shape.spine.size(); ++i) {
    if (is_kn(tg.classes[shape.spine[i]].kind)) marked.push_back(i);
  }
  auto kind_at = [&](std::size_t i) {
    return tg.classes[shape.spine[i]].kind;
  };
  auto is_leaf = [&](std::size_t i) { return i == 0 || i == diam; };
  if (marked.size() <= 1) return "1a";
  if (marked.size() == 2) {
    const std::size_t i = marked[0];
    const std::size_t j = marked[1];
    if (j == i + 1) {
      const bool bad_i = is_leaf(i) && kind_at(i) == ClassKind::kClique &&
                         kind_at(j) != ClassKind::kClique;
      const bool bad_j = is_leaf(j) && kind_at(j) == ClassKind::kClique &&
                         kind_at(i) != ClassKind::kClique;
      if (!bad_i && !bad_j) return "1b";
    }
    if (j == i + 2 && kind_at(i) == ClassKind::kNull &&
        kind_at(j) == ClassKind::kNull) {
      return "1c";
    }
    return std::nullopt;
  }
  if (marked.size() == 3) {
    const std::size_t mid = marked[1];
    if (marked[0] + 1 == mid && mid + 1 == marked[2] && mid >= 2 &&
        mid + 1 <= diam && kind_at(marked[0]) == ClassKind::kNull &&
        kind_at(marked[2]) == ClassKind::kNull) {
      return "1d";
    }
  }
  return std::nullopt;
}

bool pendant_case(const TwinGraph& tg, const QuotientShape& shape) {
  const std::size_t hub = shape.k - 1;
  const std::uint32_t w = *shape.extra;
  for (std::uint32_t c : {shape.spine[hub - 1], shape.spine[hub + 1], w}) {
    if (!is_1n(tg.classes[c].kind)) return false;
  }
  return others_singleton(tg, {shape.spine[hub - 1], shape.spine[hub],
                               shape.spine[hub + 1], w});
}

bool triangle_case(const TwinGraph& tg, const QuotientShape& shape) {
  const std::uint32_t a = shape.spine[shape.k - 1];
  const std::uint32_t b = shape.spine[shape.k];
  const std::uint32_t w = *shape.extra;
  for (std::uint32_t c : {a, b, w}) {
    if (!is_1k(tg.classes[c].kind)) return false;
  }
  return others_singleton(tg, {a, b, w});
}

CharacterizationVerdict verdict(const Graph& g, Distance diam,
                                std::string_view label, std::size_t alpha) {
  CharacterizationVerdict v;
  v.n = g.order();
  v.diameter = diam;
  v.case_label = std::string(label);
  v.accepted = is_acceptance_label(label);
  v.alpha = alpha;
  return v;
}

}  // namespace

QuotientShape QuotientShape::reversed() const {
  QuotientShape r = *this;
  std::reverse(r.spine.begin(), r.spine.end());
  const std::size_t diam = spine.size() - 1;
  if (kind == ShapeKind::kPathWithLeaf) {
    r.k = diam - (k - 1) + 1;
  } else if (kind == ShapeKind::kPathWithTriangle) {
    r.k = diam - k + 1;
  }
  return r;
}

std::string_view shape_name(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::kPath:
      return "path";
    case ShapeKind::kPathWithLeaf:
      return "path-with-leaf";
    case ShapeKind::kPathWithTriangle:
      return "path-with-triangle";
    case ShapeKind::kOther:
      return "other";
  }
  return "other";
}

QuotientShape classify_quotient(const TwinGraph& tg, Distance diameter) {
  if (diameter < 3) {
    throw PreconditionError("classify_quotient: requires diameter >= 3");
  }
  const Graph& q = tg.quotient;
  const std::size_t m = q.order();
  QuotientShape none;
  if (m == diameter + 1) {
    if (q.size() != diameter) return none;
    auto spine = as_path(q, std::nullopt, m);
    if (!spine) return none;
    QuotientShape s{ShapeKind::kPath, std::move(*spine), std::nullopt, 0};
    return s;
  }
  if (m != diameter + 2) return none;

  std::optional<QuotientShape> best;
  for (std::uint32_t w = 0; w < m; ++w) {
    auto spine = as_path(q, w, diameter + 1);
    if (!spine) continue;
    std::vector<std::size_t> at;
    for (std::size_t i = 0; i < spine->size(); ++i) {
      if (q.adjacent(w, (*spine)[i])) at.push_back(i);
    }
    QuotientShape s;
    s.spine = std::move(*spine);
    s.extra = w;
    if (at.size() == 1 && at[0] >= 2 && at[0] + 2 <= diameter) {
      s.kind = ShapeKind::kPathWithLeaf;
      s.k = at[0] + 1;
    } else if (at.size() == 2 && at[1] == at[0] + 1 && at[0] >= 1 &&
               at[1] + 1 <= diameter) {
      s.kind = ShapeKind::kPathWithTriangle;
      s.k = at[1];
    } else {
      continue;
    }
    for (QuotientShape cand : {s, s.reversed()}) {
      if (!best || shape_before(cand, *best)) best = std::move(cand);
    }
  }
  return best ? *best : none;
}

bool is_acceptance_label(std::string_view label) {
  return std::find(kAcceptLabels.begin(), kAcceptLabels.end(), label) !=
         kAcceptLabels.end();
}

CharacterizationVerdict decide_min_order(const Graph& g) {
  if (g.order() < 2) {
    throw PreconditionError("decide_min_order: requires n >= 2");
  }
  const Distance diam = diameter(g);
  if (diam == g.order()) {
    throw PreconditionError("decide_min_order: graph is disconnected");
  }
  const TwinGraph tg = twin_graph(g);
  const std::size_t alpha = tg.alpha();
  const Graph& q = tg.quotient;

  if (diam == 1) return verdict(g, diam, "D1", alpha);

  if (diam == 2) {
    if (q.order() == 2 && q.size() == 1 &&
        (tg.classes[0].kind == ClassKind::kNull ||
         tg.classes[1].kind == ClassKind::kNull)) {
      return verdict(g, diam, "D2-P2", alpha);
    }
    if (q.order() == 3 && q.size() == 2) {
      std::uint32_t mid = 0;
      while (q.degree(mid) != 2) ++mid;
      const std::uint32_t a = (mid + 1) % 3;
      const std::uint32_t b = (mid + 2) % 3;
      const ClassKind ka = tg.classes[a].kind;
      const ClassKind kb = tg.classes[b].kind;
      const bool leaves_ok = (ka == ClassKind::kSingleton && is_1k(kb)) ||
                             (kb == ClassKind::kSingleton && is_1k(ka));
      if (leaves_ok && is_1k(tg.classes[mid].kind)) {
        return verdict(g, diam, "D2-P3", alpha);
      }
    }
    return verdict(g, diam, "reject:diameter-2-quotient", alpha);
  }

  const QuotientShape shape = classify_quotient(tg, diam);
  switch (shape.kind) {
    case ShapeKind::kPath:
      for (const QuotientShape& s : {shape, shape.reversed()}) {
        if (auto label = path_case(tg, s, diam)) {
          return verdict(g, diam, *label, alpha);
        }
      }
      return verdict(g, diam, "reject:path-types", alpha);
    case ShapeKind::kPathWithLeaf:
      if (pendant_case(tg, shape)) return verdict(g, diam, "2", alpha);
      return verdict(g, diam, "reject:pendant-types", alpha);
    case ShapeKind::kPathWithTriangle:
      if (triangle_case(tg, shape)) return verdict(g, diam, "3", alpha);
      return verdict(g, diam, "reject:triangle-types", alpha);
    case ShapeKind::kOther:
      break;
  }
  return verdict(g, diam, "reject:quotient-shape", alpha);
}

namespace {

struct Slot {
  ClassKind kind;
  std::size_t size;
  auto operator<=>(const Slot&) const = default;
};

Graph blow_up(const Graph& quotient, const std::vector<Slot>& slots) {
  std::vector<Vertex> first(slots.size() + 1, 0);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    first[i + 1] = first[i] + static_cast<Vertex>(slots[i].size);
  }
  GraphBuilder b(first.back());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].kind == ClassKind::kClique) {
      for (Vertex u = first[i]; u < first[i + 1]; ++u) {
        for (Vertex v = u + 1; v < first[i + 1]; ++v) b.add_edge(u, v);
      }
    }
  }
  for (const auto& [x, y] : quotient.edges()) {
    for (Vertex u = first[x]; u < first[x + 1]; ++u) {
      for (Vertex v = first[y]; v < first[y + 1]; ++v) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

// Spine slots reversed, extra slot (if any) kept last.
std::vector<Slot> mirror(const std::vector<Slot>& slots, std::size_t spine) {
  std::vector<Slot> r = slots;
  std::reverse(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(spine));
  return r;
}

void assign(std::vector<Slot>& slots, std::size_t at, std::size_t budget,
            const std::function<void()>& done) {
  if (at == slots.size()) {
    if (budget == 0) done();
    return;
  }
  slots[at] = {ClassKind::kSingleton, 1};
  assign(slots, at + 1, budget, done);
  for (std::size_t extra = 1; extra <= budget; ++extra) {
    for (ClassKind kind : {ClassKind::kClique, ClassKind::kNull}) {
      slots[at] = {kind, extra + 1};
      assign(slots, at + 1, budget - extra, done);
    }
  }
}

}  // namespace

void for_each_min_order_graph(std::size_t beta, Distance diameter,
                              const std::function<void(const Graph&)>& emit) {
  if (beta < 1 || diameter < 3) {
    throw PreconditionError(
        "enumerate_min_order_family: requires beta >= 1 and D >= 3");
  }
  const std::size_t spine = diameter + 1;
  const std::size_t order = beta + diameter;

  auto run_shape = [&](const Graph& quotient, bool self_mirror) {
    if (quotient.order() > order) return;
    std::vector<Slot> slots(quotient.order());
    assign(slots, 0, order - quotient.order(), [&] {
      if (self_mirror && mirror(slots, spine) < slots) return;
      Graph g = blow_up(quotient, slots);
      const auto v = decide_min_order(g);
      if (v.accepted && v.diameter == diameter) emit(g);
    });
  };

  auto spine_builder = [&](std::size_t extra) {
    GraphBuilder b(spine + extra);
    for (Vertex v = 1; v < spine; ++v) b.add_edge(v - 1, v);
    return b;
  };

  run_shape(std::move(spine_builder(0)).build(), true);
  const auto w = static_cast<Vertex>(spine);
  // Reversal maps k to D - k + 2; keep the smaller representative.
  for (std::size_t k = 3; k + 1 <= diameter; ++k) {
    const std::size_t mk = diameter - k + 2;
    if (mk < k) continue;
    auto b = spine_builder(1);
    b.add_edge(static_cast<Vertex>(k - 1), w);
    run_shape(std::move(b).build(), mk == k);
  }
  // Reversal maps k to D - k + 1.
  for (std::size_t k = 2; k + 1 <= diameter; ++k) {
    const std::size_t mk = diameter - k + 1;
    if (mk < k) continue;
    auto b = spine_builder(1);
    b.add_edge(static_cast<Vertex>(k - 1), w);
    b.add_edge(static_cast<Vertex>(k), w);
    run_shape(std::move(b).build(), mk == k);
  }
}

std::vector<Graph> enumerate_min_order_family(std::size_t beta,
                                              Distance diameter) {
  std::vector<Graph> out;
  for_each_min_order_graph(beta, diameter,
                           [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace metdim
