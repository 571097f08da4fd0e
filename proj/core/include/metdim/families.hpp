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

#include "metdim/graph.hpp"

// Small named graph families. Vertex numbering follows the obvious
// construction order (path/cycle in order, hubs first).
namespace metdim {

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);  // n >= 3
Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);  // parts 0..a-1, a..
Graph star_graph(std::size_t leaves);                    // K_{1,leaves}, hub 0
Graph petersen_graph();

}  // namespace metdim
