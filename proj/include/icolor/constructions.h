// Copyright 2026 The icolor Authors
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

#ifndef ICOLOR_CONSTRUCTIONS_H_
#define ICOLOR_CONSTRUCTIONS_H_

#include <optional>
#include <vector>

#include "icolor/coloring.h"
#include "icolor/graph.h"

namespace icolor {

// One block of a product coloring: the bipartite subgraph between the two
// H-fibers over a G-edge, its color window, and the matchings (product edge
// ids) that receive window colors lo, lo+1, ..., hi in order.
struct Block {
  EdgeId g_edge = -1;
  int lo = 0;
  int hi = 0;
  std::vector<std::vector<EdgeId>> matchings;
};

struct BlockPlan {
  std::vector<Block> blocks;
};

// A product graph together with a coloring aligned to its edge order.
struct Construction {
  Graph graph;
  EdgeColoring coloring;
  std::optional<BlockPlan> plan;  // block constructions only
};

// Proper (2n-1)-edge-coloring of K_{2n} by the circle method, aligned to
// complete_graph(2n).
EdgeColoring round_robin(int n);

// Interval coloring of G [] H with t_alpha + t_beta colors:
//   (u1,v)(u2,v) gets alpha(u1u2) + min_beta(v) - 1
//   (u,v1)(u,v2) gets beta(v1v2) + max_alpha(u)
// Both inputs must be valid interval colorings of connected graphs with at
// least one edge.
Construction combine_cartesian(const Graph& g, const EdgeColoring& alpha,
                               const Graph& h, const EdgeColoring& beta);

// G [] K_2 for connected r-regular G with a t-coloring alpha. Copy 0 keeps
// alpha, copy 1 is shifted by r + 1, and the rung at u gets max_alpha(u) + 1.
// Uses t + r + 1 colors.
Construction double_regular(const Graph& g, const EdgeColoring& alpha);

// Q_n with n(n+1)/2 colors, by doubling from K_2. The graph equals
// hypercube_graph(n).
Construction hypercube_max(int n);

// G x H for r-regular H: a G-edge of color c becomes the bipartite double
// cover of H, split into r perfect matchings on colors (c-1)r+1 .. cr.
Construction tensor_blocks(const Graph& g, const EdgeColoring& alpha,
                           const Graph& h);

// G (x) H: the block also contains the identity matching, so it is
// (r+1)-regular and uses colors (c-1)(r+1)+1 .. c(r+1).
Construction strong_tensor_blocks(const Graph& g, const EdgeColoring& alpha,
                                  const Graph& h);

// G [x] H with t(r+1) + r colors. `beta` must be a proper r-edge-coloring of
// H; when omitted it is searched for, and a class-2 H is rejected.
Construction strong_blocks(const Graph& g, const EdgeColoring& alpha,
                           const Graph& h,
                           std::optional<EdgeColoring> beta = std::nullopt);

// G[H] with t|V(H)| + r colors, for H = nK_1 (r = 0) or r-regular H with a
// proper r-edge-coloring beta (searched for when omitted). Each K_{n,n}
// block is split into the cyclic matchings i -> (i + k) mod n.
Construction lex_blocks(const Graph& g, const EdgeColoring& alpha,
                        const Graph& h,
                        std::optional<EdgeColoring> beta = std::nullopt);

}  // namespace icolor

#endif  // ICOLOR_CONSTRUCTIONS_H_
