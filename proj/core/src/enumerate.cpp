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

#include "metdim/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_set>

#include "metdim/error.hpp"
#include "metdim/extremal.hpp"
#include "metdim/graph6.hpp"
#include "metdim/metric.hpp"

namespace metdim {

namespace {

using Row = std::uint16_t;

std::vector<Row> small_rows(const Graph& g) {
  std::vector<Row> rows(g.order(), 0);
  for (const auto& [u, v] : g.edges()) {
    rows[u] |= static_cast<Row>(1U << v);
    rows[v] |= static_cast<Row>(1U << u);
  }
  return rows;
}

// Colour refinement to a stable ordered partition.
std::vector<std::uint32_t> refine_colours(const std::vector<Row>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::uint32_t> colour(n);
  for (std::size_t v = 0; v < n; ++v) {
    colour[v] = static_cast<std::uint32_t>(__builtin_popcount(rows[v]));
  }
  std::size_t classes = 0;
  for (;;) {
    std::vector<std::vector<std::uint32_t>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<std::uint32_t> around;
      for (std::size_t w = 0; w < n; ++w) {
        if ((rows[v] >> w) & 1U) around.push_back(colour[w]);
      }
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    auto uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (std::size_t v = 0; v < n; ++v) {
      colour[v] = static_cast<std::uint32_t>(
          std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    }
    if (uniq.size() == classes) return colour;
    classes = uniq.size();
  }
}

std::uint64_t code_for(const std::vector<Row>& rows,
                       const std::vector<std::uint8_t>& at) {
  std::uint64_t code = 0;
  const std::size_t n = at.size();
  for (std::size_t j = 1; j < n; ++j) {
    const Row r = rows[at[j]];
    for (std::size_t i = 0; i < j; ++i) code = (code << 1) | ((r >> at[i]) & 1U);
  }
  return code;
}

Graph decode(std::size_t n, std::uint64_t code) {
  GraphBuilder b(n);
  int bit = static_cast<int>(n * (n - 1) / 2) - 1;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, --bit) {
      if ((code >> bit) & 1U) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

// Isomorphism certificate used for deduplication: the least code among the
// labellings that respect the colour-refinement cell order.
std::uint64_t certificate(const std::vector<Row>& rows) {
  const std::size_t n = rows.size();
  const auto colour = refine_colours(rows);
  std::vector<std::uint8_t> at(n);  // at[position] = vertex
  std::iota(at.begin(), at.end(), 0);
  std::stable_sort(at.begin(), at.end(), [&](std::uint8_t a, std::uint8_t b) {
    return colour[a] < colour[b];
  });
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // [begin, end)
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && colour[at[j]] == colour[at[i]]) ++j;
    if (j - i > 1) cells.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = code_for(rows, at);
  for (;;) {
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto first = at.begin() + static_cast<std::ptrdiff_t>(cells[c].first);
      auto last = at.begin() + static_cast<std::ptrdiff_t>(cells[c].second);
      if (std::next_permutation(first, last)) break;
    }
    if (c == cells.size()) break;
    best = std::min(best, code_for(rows, at));
  }
  return best;
}

// Least code over all n! labellings. Vertices are placed position by
// position; placing position j fixes column j of the bit-string, so a branch
// whose columns so far exceed the best found is cut.
class MinimumLabelling {
 public:
  explicit MinimumLabelling(const std::vector<Row>& rows)
      : rows_(rows), n_(rows.size()), cur_(n_, 0), best_(n_, ~Row{0}),
        at_(n_, 0) {}

  std::uint64_t run() {
    if (n_ <= 1) return 0;
    place(0, 0);
    std::uint64_t code = 0;
    for (std::size_t j = 1; j < n_; ++j) code = (code << j) | best_[j];
    return code;
  }

 private:
  // -1, 0, 1 as columns 1..j compare to the best labelling.
  int compare_prefix(std::size_t j) const {
    for (std::size_t k = 1; k <= j; ++k) {
      if (cur_[k] != best_[k]) return cur_[k] < best_[k] ? -1 : 1;
    }
    return 0;
  }

  void place(std::size_t j, Row used) {
    if (j == n_) {
      if (compare_prefix(n_ - 1) < 0) best_ = cur_;
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if ((used >> v) & 1U) continue;
      Row col = 0;
      for (std::size_t i = 0; i < j; ++i) {
        col = static_cast<Row>((col << 1) | ((rows_[at_[i]] >> v) & 1U));
      }
      cur_[j] = col;
      if (compare_prefix(j) > 0) continue;
      at_[j] = static_cast<std::uint8_t>(v);
      place(j + 1, static_cast<Row>(used | (1U << v)));
    }
  }

  const std::vector<Row>& rows_;
  std::size_t n_;
  std::vector<Row> cur_;
  std::vector<Row> best_;
  std::vector<std::uint8_t> at_;
};

void require_canonical_size(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw PreconditionError("canonical form supports at most " +
                            std::to_string(kMaxCanonicalOrder) + " vertices");
  }
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  const unsigned threads = static_cast<unsigned>(
      std::max<std::size_t>(1, std::min<std::size_t>(jobs, count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i, 0U);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) fn(i, t);
    });
  }
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  require_canonical_size(g);
  return MinimumLabelling(small_rows(g)).run();
}

Graph canonical_form(const Graph& g) {
  return decode(g.order(), canonical_code(g));
}

std::vector<Graph> connected_graphs(std::size_t n, unsigned jobs) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw PreconditionError("connected_graphs: n must be in [1, " +
                            std::to_string(kMaxEnumerationOrder) + "]");
  }
  // Every connected graph on m + 1 vertices is a connected graph on m
  // vertices plus one vertex with a nonempty neighbourhood (delete a
  // non-cut vertex), so each level is grown from the previous one.
  std::vector<std::uint64_t> level{0};
  for (std::size_t m = 1; m < n; ++m) {
    std::vector<std::unordered_set<std::uint64_t>> found(
        std::max(1U, jobs));
    parallel_for(level.size(), jobs, [&](std::size_t i, unsigned t) {
      auto rows = small_rows(decode(m, level[i]));
      rows.push_back(0);
      for (Row mask = 1; mask < (Row{1} << m); ++mask) {
        auto ext = rows;
        ext[m] = mask;
        for (std::size_t v = 0; v < m; ++v) {
          if ((mask >> v) & 1U) ext[v] |= static_cast<Row>(1U << m);
        }
        found[t].insert(certificate(ext));
      }
    });
    std::unordered_set<std::uint64_t> merged;
    for (auto& part : found) merged.insert(part.begin(), part.end());
    level.assign(merged.begin(), merged.end());
    std::sort(level.begin(), level.end());
  }
  std::vector<std::pair<int, std::uint64_t>> keyed(level.size());
  parallel_for(level.size(), jobs, [&](std::size_t i, unsigned) {
    const auto code = MinimumLabelling(small_rows(decode(n, level[i]))).run();
    keyed[i] = {__builtin_popcountll(code), code};
  });
  std::sort(keyed.begin(), keyed.end());
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (const auto& [edges, code] : keyed) out.push_back(decode(n, code));
  return out;
}

VerificationRun verify_characterization(std::size_t n_max, unsigned jobs) {
  if (n_max > kMaxEnumerationOrder) {
    throw PreconditionError("verify_characterization: n_max must be <= " +
                            std::to_string(kMaxEnumerationOrder));
  }
  VerificationRun run;
  run.summary.n_max = n_max;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const auto graphs = connected_graphs(n, jobs);
    std::vector<VerificationReport> part(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i, unsigned) {
      const Graph& g = graphs[i];
      VerificationReport& r = part[i];
      r.graph6 = serialize_graph6(g);
      r.n = n;
      r.diameter = diameter(g);
      r.beta = brute_force_dimension(g).beta;
      r.verdict = decide_min_order(g);
      r.agrees = r.verdict.accepted == (r.beta == n - r.diameter);
    });
    for (auto& r : part) run.reports.push_back(std::move(r));
  }
  auto& s = run.summary;
  for (const auto& r : run.reports) {
    ++s.graphs;
    ++s.by_label[r.verdict.case_label];
    if (!r.agrees) {
      ++s.disagreements;
      s.counterexamples.push_back(r.graph6);
    }
  }
  return run;
}

BoundsSummary verify_bounds(const VerificationRun& run) {
  const std::size_t n_max = run.summary.n_max;
  std::map<std::pair<std::size_t, Distance>, BoundsRow> rows;
  for (const auto& r : run.reports) {
    auto [it, fresh] = rows.try_emplace({r.beta, r.diameter});
    BoundsRow& row = it->second;
    if (fresh) {
      row.beta = r.beta;
      row.diameter = r.diameter;
      row.min_order = r.n;
      row.max_order = r.n;
    }
    ++row.graphs;
    row.min_order = std::min(row.min_order, r.n);
    row.max_order = std::max(row.max_order, r.n);
  }
  for (std::size_t beta = 1; beta < n_max; ++beta) {
    for (Distance d = 1; beta + d <= n_max; ++d) {
      rows.try_emplace({beta, d}, BoundsRow{beta, d});
    }
  }
  BoundsSummary out;
  out.n_max = n_max;
  out.ok = true;
  for (auto& [key, row] : rows) {
    row.formula_min = row.beta + row.diameter;
    row.formula_max = row.diameter == 1 ? row.beta + 1
                                        : max_order(row.beta, row.diameter);
    if (row.graphs == 0) {
      row.min_ok = row.max_ok = false;
    } else {
      row.min_ok = row.min_order >= row.formula_min &&
                   (row.formula_min > n_max || row.min_order == row.formula_min);
      row.max_ok = row.max_order <= row.formula_max &&
                   (row.formula_max > n_max || row.max_order == row.formula_max);
    }
    out.ok = out.ok && row.min_ok && row.max_ok;
    out.rows.push_back(row);
  }
  return out;
}

BoundsSummary verify_bounds(std::size_t n_max, unsigned jobs) {
  return verify_bounds(verify_characterization(n_max, jobs));
}

}  // namespace metdim
