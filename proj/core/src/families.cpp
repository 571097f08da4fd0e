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

#include "metdim/families.hpp"

#include "metdim/error.hpp"

namespace metdim {

Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(v - 1, v);
  return std::move(b).build();
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) {
    b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  }
  return std::move(b).build();
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  GraphBuilder builder(a + b);
  for (Vertex u = 0; u < a; ++u) {
    for (std::size_t v = a; v < a + b; ++v) {
      builder.add_edge(u, static_cast<Vertex>(v));
    }
  }
  return std::move(builder).build();
}

Graph star_graph(std::size_t leaves) { return complete_bipartite(1, leaves); }

Graph petersen_graph() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);          // outer cycle
    b.add_edge(i, i + 5);                // spokes
    b.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return std::move(b).build();
}

}  // namespace metdim
