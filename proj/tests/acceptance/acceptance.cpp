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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. All checks are exact.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "metdim/distance.hpp"
#include "metdim/enumerate.hpp"
#include "metdim/extremal.hpp"
#include "metdim/families.hpp"
#include "metdim/graph6.hpp"
#include "metdim/metric.hpp"
#include "metdim/twins.hpp"
#include "support.hpp"

namespace {

using namespace metdim;
using Clock = std::chrono::steady_clock;

constexpr double kSmallVerifySeconds = 60.0;   // n <= 7 budget
constexpr std::uint64_t kSweepLimit = 1000000;  // exhaustive below this
constexpr std::uint64_t kSweepSamples = 100000;
constexpr std::size_t kRandomGraphs = 200;
constexpr std::uint64_t kSeed = 20261015;

struct Gate {
  int failures = 0;

  void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Cube plus layer sizes counted from the block boundaries.
std::uint64_t counted_order(std::size_t beta, Distance d) {
  const std::uint64_t a = (d + 2) / 3;
  std::uint64_t total = ipow(d - a + 1, beta);
  for (std::uint64_t r = 0; r < a; ++r) total += beta * ipow(2 * r + 1, beta - 1);
  return total;
}

struct BasisPair {
  Graph graph;
  std::vector<Vertex> basis;
};

// True if no set of `size` vertices resolves the graph: exhaustive when the
// subset count is at most kSweepLimit, otherwise kSweepSamples random sets.
bool no_smaller_set(const DistanceMatrix& dm, std::size_t size, bool& sampled,
                    std::mt19937_64& rng) {
  const std::size_t n = dm.order();
  bool found = false;
  sampled = testing::binomial(n, size) > kSweepLimit;
  if (!sampled) {
    testing::for_each_subset(n, size, [&](std::span<const Vertex> s) {
      found = resolves(dm, s);
      return !found;
    });
    return !found;
  }
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  for (std::uint64_t i = 0; i < kSweepSamples && !found; ++i) {
    std::vector<Vertex> s;
    std::sample(all.begin(), all.end(), std::back_inserter(s),
                static_cast<std::ptrdiff_t>(size), rng);
    found = resolves(dm, s);
  }
  return !found;
}

}  // namespace

int main() {
  Gate gate;
  const unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  std::mt19937_64 rng(kSeed);
  std::vector<BasisPair> audited;

  // 1. Exhaustive characterization check.
  {
    const auto t = Clock::now();
    const auto small = verify_characterization(7, jobs);
    const double small_s = seconds_since(t);
    const auto t8 = Clock::now();
    const auto run = verify_characterization(8, jobs);
    const double full_s = seconds_since(t8);
    std::ostringstream d;
    d << run.summary.graphs << " graphs, " << run.summary.disagreements
      << " disagreements; n<=7 in " << small_s << " s, n<=8 in " << full_s << " s";
    for (const auto& g6 : run.summary.counterexamples) d << " " << g6;
    gate.report(1, "exhaustive verification n<=8",
                run.summary.disagreements == 0 && small.summary.disagreements == 0 &&
                    run.summary.graphs == 12112 && small_s < kSmallVerifySeconds,
                d.str());

    // 2. Minimum order per (beta, D) with beta + D <= 8, plus witnesses.
    const auto bounds = verify_bounds(run);
    bool ok = true;
    std::size_t pairs = 0;
    std::ostringstream bad;
    for (std::size_t beta = 1; beta < 8; ++beta) {
      for (Distance dd = 1; beta + dd <= 8; ++dd) {
        ++pairs;
        bool row_ok = false;
        for (const auto& r : bounds.rows) {
          if (r.beta == beta && r.diameter == dd) {
            row_ok = r.graphs > 0 && r.min_order == beta + dd;
          }
        }
        const Graph w = dd == 1 ? complete_graph(beta + 1) : build_broom(beta, dd);
        const auto basis = metric_dimension(w, SolverOptions{jobs});
        row_ok = row_ok && w.order() == beta + dd && diameter(w) == dd &&
                 basis.beta == beta;
        audited.push_back({w, basis.witness});
        if (!row_ok) bad << " (" << beta << "," << dd << ")";
        ok = ok && row_ok;
      }
    }
    gate.report(2, "minimum order beta+D", ok,
                std::to_string(pairs) + " pairs checked" +
                    (ok ? std::string() : "; failing" + bad.str()));
  }

  // 3. Maximum order formula and construction.
  {
    bool ok = true;
    std::ostringstream d;
    for (Distance dd = 2; dd <= 9; ++dd) ok = ok && max_order(1, dd) == dd + 1U;
    for (std::size_t beta = 1; beta <= 5; ++beta) {
      ok = ok && max_order(beta, 3) == ipow(3, beta) + beta;
    }
    d << "formulas " << (ok ? "ok" : "WRONG");
    std::size_t sampled_instances = 0;
    for (std::size_t beta = 1; beta <= 3; ++beta) {
      for (Distance dd = 2; dd <= 6; ++dd) {
        const auto t = Clock::now();
        const MaxGraph mg = build_max_graph(beta, dd);
        const DistanceMatrix dm(mg.graph);
        bool sampled = false;
        const bool inst = mg.points.size() == counted_order(beta, dd) &&
                          mg.points.size() == max_order(beta, dd) &&
                          dm.diameter() == dd && resolves(dm, mg.basis) &&
                          no_smaller_set(dm, beta - 1, sampled, rng);
        if (sampled) ++sampled_instances;
        if (!inst) d << "; (" << beta << "," << dd << ") FAILED";
        if (beta == 3 && dd == 6) {
          d << "; (3,6) has " << mg.points.size() << " vertices, checked in "
            << seconds_since(t) << " s";
        }
        ok = ok && inst;
        audited.push_back({mg.graph, mg.basis});
      }
    }
    d << "; " << sampled_instances << " sampled sweeps";
    gate.report(3, "maximum order and extremal construction", ok, d.str());
  }

  // 4 and 5. Distance law and closure on the lattice graphs.
  {
    bool law = true;
    bool closure = true;
    std::uint64_t pairs = 0;
    for (std::size_t beta = 1; beta <= 3; ++beta) {
      for (Distance dd = 2; dd <= 6; ++dd) {
        const MaxGraph mg = build_max_graph(beta, dd);
        const DistanceMatrix dm(mg.graph);
        for (Vertex u = 0; u < mg.points.size(); ++u) {
          for (Vertex v = 0; v < mg.points.size(); ++v) {
            ++pairs;
            const auto& x = mg.points[u];
            const auto& y = mg.points[v];
            law = law && dm(u, v) == linf_distance(x, y);
            if (u == v) continue;
            const LatticePoint z = step_toward(x, y);
            closure = closure && mg.index_of(z).has_value() &&
                      linf_distance(z, y) + 1 == linf_distance(x, y);
          }
        }
      }
    }
    gate.report(4, "BFS distance equals L-infinity distance", law,
                std::to_string(pairs) + " ordered pairs");
    gate.report(5, "step_toward stays in the vertex set", closure,
                std::to_string(pairs) + " ordered pairs");
  }

  // 6. Twin reduction.
  {
    bool ok = true;
    std::size_t checked = 0;
    std::ostringstream bad;
    auto check = [&](const Graph& g) {
      const auto r = reduce_twins(g);
      const bool same = brute_force_dimension(g).beta ==
                        brute_force_dimension(r.reduced).beta + r.delta;
      if (!same) bad << " " << serialize_graph6(g);
      ok = ok && same;
      ++checked;
    };
    for (std::size_t n = 1; n <= 8; ++n) {
      for (const Graph& g : connected_graphs(n, jobs)) check(g);
    }
    testing::Rng trng(kSeed + 6);
    std::uniform_int_distribution<std::size_t> size(4, 14);
    for (std::size_t i = 0; i < kRandomGraphs; ++i) check(testing::planted_twins(size(trng), trng));
    gate.report(6, "twin reduction preserves beta - delta", ok,
                std::to_string(checked) + " graphs" + bad.str());
  }

  // 7. Upper-bound audit for every pair produced in criteria 2 and 3.
  {
    bool ok = true;
    std::size_t checks = 0;
    for (const auto& p : audited) {
      const Distance dd = diameter(p.graph);
      for (Distance k = 0; k <= dd; ++k) {
        ok = ok && upper_bound_audit(p.graph, p.basis, k);
        ++checks;
      }
    }
    gate.report(7, "upper-bound audit", ok,
                std::to_string(audited.size()) + " graphs, " + std::to_string(checks) +
                    " (graph, k) checks");
  }

  // 8. Pruned solver against the brute-force oracle.
  {
    bool ok = true;
    std::size_t checked = 0;
    std::ostringstream bad;
    auto check = [&](const Graph& g) {
      const bool same = metric_dimension(g, SolverOptions{jobs}).beta ==
                        brute_force_dimension(g).beta;
      if (!same) bad << " " << serialize_graph6(g);
      ok = ok && same;
      ++checked;
    };
    for (std::size_t n = 1; n <= 8; ++n) {
      for (const Graph& g : connected_graphs(n, jobs)) check(g);
    }
    testing::Rng trng(kSeed + 8);
    std::uniform_int_distribution<std::size_t> size(2, 12);
    std::uniform_real_distribution<double> density(0.05, 0.6);
    for (std::size_t i = 0; i < kRandomGraphs; ++i) {
      check(testing::random_connected(size(trng), density(trng), trng));
    }
    gate.report(8, "solver equals brute-force oracle", ok,
                std::to_string(checked) + " graphs" + bad.str());
  }

  std::printf("%s: %d criteria failed\n", gate.failures ? "FAILED" : "PASSED",
              gate.failures);
  return gate.failures == 0 ? 0 : 1;
}
