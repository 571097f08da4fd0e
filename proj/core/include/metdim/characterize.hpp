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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metdim/distance.hpp"
#include "metdim/graph.hpp"
#include "metdim/twins.hpp"

namespace metdim {

// Shapes a twin graph can take when beta(G) = n - D and D >= 3:
//   kPath              P_{D+1} = u_0 ... u_D
//   kPathWithLeaf      P_{D+1} plus w adjacent to u_{k-1} only, k in [3, D-1]
//   kPathWithTriangle  P_{D+1} plus w adjacent to u_{k-1} and u_k,
//                      k in [2, D-1]
enum class ShapeKind { kPath, kPathWithLeaf, kPathWithTriangle, kOther };

struct QuotientShape {
  ShapeKind kind = ShapeKind::kOther;
  std::vector<std::uint32_t> spine;   // quotient vertices u_0 .. u_D
  std::optional<std::uint32_t> extra; // w
  std::size_t k = 0;                  // attachment index (leaf/triangle only)

  // The same shape read from the other end of the spine.
  QuotientShape reversed() const;
};

std::string_view shape_name(ShapeKind kind);

// Classifies the quotient of a graph of diameter D >= 3. Of the two spine
// orientations the one with the smaller k is reported, ties broken by the
// smaller first spine vertex. Throws PreconditionError if D < 3.
QuotientShape classify_quotient(const TwinGraph& tg, Distance diameter);

struct CharacterizationVerdict {
  std::size_t n = 0;
  Distance diameter = 0;
  bool accepted = false;
  // Acceptance: "D1", "D2-P2", "D2-P3", "1a", "1b", "1c", "1d", "2", "3".
  // Otherwise a "reject:..." reason.
  std::string case_label;
  std::size_t alpha = 0;

  std::size_t beta_expected() const { return n - diameter; }
};

bool is_acceptance_label(std::string_view label);

// Decides beta(g) = n - diam(g) from the twin graph alone, without computing
// beta. Requires g connected with n >= 2.
CharacterizationVerdict decide_min_order(const Graph& g);

// All graphs (up to isomorphism) of order beta + D, diameter D and metric
// dimension beta, built by blowing up every admissible quotient shape with
// every assignment of class types and cardinalities. Requires beta >= 1 and
// D >= 3.
void for_each_min_order_graph(std::size_t beta, Distance diameter,
                              const std::function<void(const Graph&)>& emit);
std::vector<Graph> enumerate_min_order_family(std::size_t beta,
                                              Distance diameter);

}  // namespace metdim
