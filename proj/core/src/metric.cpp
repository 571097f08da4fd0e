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

#include "metdim/metric.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <string>
#include <thread>

#include "metdim/error.hpp"
#include "metdim/twins.hpp"

namespace metdim {

namespace {

void check_connected(const DistanceMatrix& dm, const char* op) {
  if (!dm.connected()) {
    throw PreconditionError(std::string(op) + ": graph is disconnected");
  }
}

void check_vertices(const DistanceMatrix& dm, std::span<const Vertex> s) {
  for (Vertex v : s) {
    if (v >= dm.order()) {
      throw PreconditionError("vertex out of range: " + std::to_string(v));
    }
  }
}

// Depth-first search for the lexicographically least resolving k-set.
// Vertices are split into classes by their coordinates so far; a set resolves
// once every vertex sits in its own class.
class SubsetSearch {
 public:
  SubsetSearch(const DistanceMatrix& dm, const std::vector<TwinClass>& twins,
               std::size_t k)
      : dm_(dm), n_(dm.order()), k_(k), radix_(dm.diameter() + 1) {
    class_of_.assign(n_, kNoClass);
    for (const auto& c : twins) {
      if (c.size() < 2) continue;
      const auto id = static_cast<std::uint32_t>(obligations_.size());
      obligations_.push_back({c.members, c.size() - 1, 0});
      for (Vertex v : c.members) class_of_[v] = id;
    }
    labels_.assign(k_ + 1, std::vector<std::uint32_t>(n_, 0));
    counts_.assign(k_ + 1, 1);
    stamp_.assign(n_ * radix_, 0);
    remap_.assign(n_ * radix_, 0);
    chosen_.reserve(k_);
  }

  // Least resolving k-set whose smallest element is `first`.
  std::optional<std::vector<Vertex>> run_from(Vertex first) {
    chosen_.clear();
    for (auto& ob : obligations_) ob.taken = 0;
    if (!feasible_after(first)) return std::nullopt;
    if (extend(0, first)) return chosen_;
    return std::nullopt;
  }

 private:
  static constexpr std::uint32_t kNoClass = ~std::uint32_t{0};

  struct Obligation {
    std::vector<Vertex> members;
    std::size_t need;
    std::size_t taken;
  };

  // Could a set that takes `x` next (skipping everything below it) still
  // meet every twin obligation with the slots left after x?
  bool feasible_after(Vertex x) {
    const std::uint32_t cx = class_of_[x];
    const std::size_t slots = k_ - chosen_.size() - 1;
    std::size_t deficit = 0;
    for (std::uint32_t c = 0; c < obligations_.size(); ++c) {
      const auto& ob = obligations_[c];
      const std::size_t taken = ob.taken + (c == cx ? 1 : 0);
      if (taken >= ob.need) continue;
      const std::size_t missing = ob.need - taken;
      const auto avail = static_cast<std::size_t>(
          ob.members.end() -
          std::upper_bound(ob.members.begin(), ob.members.end(), x));
      if (missing > avail) return false;
      deficit += missing;
    }
    return deficit <= slots;
  }

  // Splits the classes at `depth` by distance to x into depth + 1.
  void refine(std::size_t depth, Vertex x) {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    const auto& in = labels_[depth];
    auto& out = labels_[depth + 1];
    const auto row = dm_.row(x);
    std::uint32_t next = 0;
    for (Vertex v = 0; v < n_; ++v) {
      const std::size_t key = in[v] * radix_ + row[v];
      if (stamp_[key] != epoch_) {
        stamp_[key] = epoch_;
        remap_[key] = next++;
      }
      out[v] = remap_[key];
    }
    counts_[depth + 1] = next;
  }

  bool extend(std::size_t depth, Vertex x) {
    chosen_.push_back(x);
    if (class_of_[x] != kNoClass) ++obligations_[class_of_[x]].taken;
    refine(depth, x);
    if (chosen_.size() == k_) {
      if (counts_[depth + 1] == n_) return true;
    } else {
      const std::size_t last = n_ - (k_ - chosen_.size());
      for (Vertex y = x + 1; y <= last; ++y) {
        if (!feasible_after(y)) continue;
        if (extend(depth + 1, y)) return true;
      }
    }
    if (class_of_[x] != kNoClass) --obligations_[class_of_[x]].taken;
    chosen_.pop_back();
    return false;
  }

  const DistanceMatrix& dm_;
  std::size_t n_;
  std::size_t k_;
  std::size_t radix_;
  std::vector<std::uint32_t> class_of_;
  std::vector<Obligation> obligations_;
  std::vector<std::vector<std::uint32_t>> labels_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> remap_;
  std::uint32_t epoch_ = 0;
  std::vector<Vertex> chosen_;
};

std::optional<std::vector<Vertex>> search_size(
    const DistanceMatrix& dm, const std::vector<TwinClass>& twins,
    std::size_t k, unsigned jobs) {
  const auto firsts = static_cast<Vertex>(dm.order() - k + 1);
  std::vector<std::optional<std::vector<Vertex>>> found(firsts);
  std::atomic<Vertex> next{0};
  std::atomic<Vertex> best{firsts};
  auto worker = [&] {
    SubsetSearch search(dm, twins, k);
    for (;;) {
      const Vertex f = next.fetch_add(1);
      if (f >= firsts || f >= best.load()) return;
      found[f] = search.run_from(f);
      if (found[f]) {
        Vertex cur = best.load();
        while (f < cur && !best.compare_exchange_weak(cur, f)) {
        }
      }
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(jobs, firsts));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  const Vertex b = best.load();
  if (b < firsts) return found[b];
  return std::nullopt;
}

bool resolves_pairwise(const DistanceMatrix& dm, std::span<const Vertex> s) {
  const std::size_t n = dm.order();
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = v + 1; w < n; ++w) {
      bool split = false;
      for (Vertex x : s) {
        if (dm(v, x) != dm(w, x)) {
          split = true;
          break;
        }
      }
      if (!split) return false;
    }
  }
  return true;
}

}  // namespace

bool pair_resolved_by(const DistanceMatrix& dm, Vertex v, Vertex w, Vertex x) {
  const std::size_t n = dm.order();
  if (v >= n || w >= n || x >= n) {
    throw PreconditionError("pair_resolved_by: vertex out of range");
  }
  return dm(v, x) != dm(w, x);
}

bool resolves(const DistanceMatrix& dm, std::span<const Vertex> s) {
  check_connected(dm, "resolves");
  check_vertices(dm, s);
  std::vector<Vertex> order(dm.order());
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](Vertex a, Vertex b) {
    for (Vertex x : s) {
      if (dm(a, x) != dm(b, x)) return dm(a, x) < dm(b, x);
    }
    return false;
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (!less(order[i - 1], order[i])) return false;
  }
  return true;
}

bool complement_resolves(const DistanceMatrix& dm, std::span<const Vertex> s) {
  check_connected(dm, "complement_resolves");
  check_vertices(dm, s);
  std::vector<bool> inside(dm.order(), false);
  for (Vertex v : s) inside[v] = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j]) continue;
      bool split = false;
      for (Vertex x = 0; x < dm.order() && !split; ++x) {
        split = !inside[x] && dm(s[i], x) != dm(s[j], x);
      }
      if (!split) return false;
    }
  }
  return true;
}

std::vector<std::vector<Distance>> metric_coordinates(
    const DistanceMatrix& dm, std::span<const Vertex> s) {
  check_vertices(dm, s);
  std::vector<std::vector<Distance>> out(dm.order());
  for (Vertex v = 0; v < dm.order(); ++v) {
    out[v].reserve(s.size());
    for (Vertex x : s) out[v].push_back(dm(v, x));
  }
  return out;
}

std::size_t twin_lower_bound(const Graph& g) {
  std::size_t bound = 0;
  for (const auto& c : twin_partition(g)) bound += c.size() - 1;
  return bound;
}

MetricBasisResult metric_dimension(const Graph& g, const SolverOptions& opts) {
  return metric_dimension(g, DistanceMatrix(g), opts);
}

MetricBasisResult metric_dimension(const Graph& g, const DistanceMatrix& dm,
                                   const SolverOptions& opts) {
  check_connected(dm, "metric_dimension");
  const std::size_t n = g.order();
  if (n == 1) return {0, {}};
  const auto twins = twin_partition(g);
  std::size_t lower = 0;
  for (const auto& c : twins) lower += c.size() - 1;
  lower = std::max<std::size_t>(lower, 1);
  for (std::size_t k = lower; k < n; ++k) {
    if (auto set = search_size(dm, twins, k, opts.jobs)) {
      return {k, std::move(*set)};
    }
  }
  // Any n - 1 vertices resolve a connected graph, so this is unreachable.
  throw Error("metric_dimension: no resolving set found");
}

MetricBasisResult brute_force_dimension(const Graph& g, std::size_t cap) {
  const std::size_t n = g.order();
  if (n > cap) {
    throw PreconditionError("brute_force_dimension: n = " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
  }
  const DistanceMatrix dm(g);
  check_connected(dm, "brute_force_dimension");
  for (std::size_t k = 0; k <= n; ++k) {
    // Lexicographic k-combinations of 0..n-1.
    std::vector<Vertex> combo(k);
    std::iota(combo.begin(), combo.end(), 0);
    for (;;) {
      if (resolves_pairwise(dm, combo)) return {k, combo};
      std::size_t i = k;
      while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  throw Error("brute_force_dimension: no resolving set found");
}

}  // namespace metdim
