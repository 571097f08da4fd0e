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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "metdim/characterize.hpp"
#include "metdim/distance.hpp"
#include "metdim/graph.hpp"

namespace metdim {

inline constexpr std::size_t kMaxEnumerationOrder = 8;
inline constexpr std::size_t kMaxCanonicalOrder = 10;

// Canonical labelling: the vertex order whose graph6 edge bit-string is
// lexicographically least over all n! orders, returned as that bit-string
// read as an integer. Isomorphic graphs get the same code. Requires
// n <= kMaxCanonicalOrder.
std::uint64_t canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);

// Every connected graph on n vertices exactly once up to isomorphism, in
// canonical labelling, ordered by edge count and then edge bit-string.
// Requires 1 <= n <= kMaxEnumerationOrder.
std::vector<Graph> connected_graphs(std::size_t n, unsigned jobs = 1);

struct VerificationReport {
  std::string graph6;
  std::size_t n = 0;
  Distance diameter = 0;
  std::size_t beta = 0;
  CharacterizationVerdict verdict;
  bool agrees = false;  // verdict.accepted == (beta == n - diameter)
};

struct VerificationSummary {
  std::size_t n_max = 0;
  std::size_t graphs = 0;
  std::size_t disagreements = 0;
  std::map<std::string, std::size_t> by_label;
  std::vector<std::string> counterexamples;  // graph6 of disagreeing graphs
};

struct VerificationRun {
  std::vector<VerificationReport> reports;  // by n, then enumeration order
  VerificationSummary summary;
};

// Runs decide_min_order against brute-force beta on every connected graph
// with 2 <= n <= n_max. Requires n_max <= kMaxEnumerationOrder. Output is
// identical for every `jobs`.
VerificationRun verify_characterization(std::size_t n_max, unsigned jobs = 1);

struct BoundsRow {
  std::size_t beta = 0;
  Distance diameter = 0;
  std::size_t graphs = 0;
  std::size_t min_order = 0;  // observed
  std::size_t max_order = 0;  // observed
  std::uint64_t formula_min = 0;  // beta + D
  std::uint64_t formula_max = 0;  // max_order(beta, D); beta + 1 when D = 1
  bool min_ok = false;
  bool max_ok = false;
};

struct BoundsSummary {
  std::size_t n_max = 0;
  std::vector<BoundsRow> rows;  // by (beta, D)
  bool ok = false;
};

// Observed minimum and maximum order per (beta, D) over all connected graphs
// with n <= n_max, against beta + D and max_order. A row passes when the
// observed extremes respect the formulas and attain them whenever the
// formula value is at most n_max. Pairs with beta + D <= n_max that were not
// observed at all appear as failing rows.
BoundsSummary verify_bounds(std::size_t n_max, unsigned jobs = 1);
BoundsSummary verify_bounds(const VerificationRun& run);

}  // namespace metdim
