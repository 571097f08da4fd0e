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

#include <string>
#include <string_view>

#include "metdim/graph.hpp"

namespace metdim {

// graph6 encoding without the optional ">>graph6<<" header. The vertex count
// uses the one-byte form for n <= 62, '~' plus three bytes up to 258047, and
// "~~" plus six bytes beyond. Edge bits follow the upper triangle in column
// order: (0,1), (0,2), (1,2), (0,3), ...
//
// parse_graph6 throws ParseError (with byte offset) on a malformed size
// header, bytes outside 63..126, wrong body length, or nonzero padding bits.
// A zero-vertex graph is rejected since Graph requires n >= 1.
Graph parse_graph6(std::string_view text);
std::string serialize_graph6(const Graph& g);

// Graphviz rendering; node ids are vertex indices.
std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace metdim
