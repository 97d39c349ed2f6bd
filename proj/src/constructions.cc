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

#include "icolor/constructions.h"

#include <algorithm>
#include <string>
#include <utility>

#include "icolor/chromatic.h"
#include "icolor/families.h"
#include "icolor/matching.h"
#include "icolor/products.h"
#include "icolor/solver.h"

namespace icolor {
namespace {

struct Extremes {
  std::vector<int> min;
  std::vector<int> max;
};

// Palette extremes are always recomputed from the coloring itself.
Extremes palette_extremes(const Graph& g, const EdgeColoring& c) {
  Extremes x{std::vector<int>(g.order(), 0), std::vector<int>(g.order(), 0)};
  for (EdgeId e = 0; e < g.size(); ++e) {
    for (Vertex v : {g.edge(e).u, g.edge(e).v}) {
      const int color = c.colors[e];
      x.min[v] = x.min[v] == 0 ? color : std::min(x.min[v], color);
      x.max[v] = std::max(x.max[v], color);
    }
  }
  return x;
}

int require_interval(const Graph& g, const EdgeColoring& c,
                     const char* what) {
  Verdict v = verify_interval(g, c);
  if (!v.valid) {
    throw Error(std::string(what) + ": input coloring of " + g.name() +
                " is not an interval coloring");
  }
  return v.t;
}

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g) || g.size() == 0) {
    throw Error(std::string(what) + ": " + g.name() +
                " must be connected with at least one edge");
  }
}

int require_regular(const Graph& h, const char* what) {
  auto r = regular_degree(h);
  if (!r) throw Error(std::string(what) + ": " + h.name() + " is not regular");
  return *r;
}

// A proper r-edge-coloring of r-regular h, either checked (when supplied) or
// found by exhaustive search.
EdgeColoring proper_regular_coloring(const Graph& h, int r,
                                     std::optional<EdgeColoring> beta,
                                     const char* what) {
  if (beta) {
    if (static_cast<int>(beta->colors.size()) != h.size()) {
      throw Error(std::string(what) + ": beta length does not match " +
                  h.name());
    }
    for (Vertex v = 0; v < h.order(); ++v) {
      std::vector<bool> seen(r + 1, false);
      for (EdgeId e : h.incident(v)) {
        const int c = beta->colors[e];
        if (c < 1 || c > r || seen[c]) {
          throw Error(std::string(what) + ": beta is not a proper " +
                      std::to_string(r) + "-edge-coloring of " + h.name());
        }
        seen[c] = true;
      }
    }
    return *std::move(beta);
  }
  if (h.size() == 0) return EdgeColoring{};

  if (is_connected(h)) {
    // For regular h an interval r-coloring is exactly a proper one.
    Decision d = decide_t(h, r, kDecideTimeboxSeconds);
    if (d.outcome == DecideOutcome::kFeasible) return *std::move(d.witness);
    if (d.outcome == DecideOutcome::kTimeout) {
      throw Error(std::string(what) + ": search for a proper coloring of " +
                  h.name() + " timed out");
    }
  } else {
    auto found = find_proper_coloring(h, r);
    if (found.status == SearchStatus::kFound) return *std::move(found.coloring);
  }
  throw Error(std::string(what) + ": " + h.name() + " is " +
              std::to_string(r) +
              "-regular of class 2 (exhaustive search found no proper " +
              std::to_string(r) + "-edge-coloring), so it has no interval "
              "coloring");
}

// Block graph between two H-fibers: left vertex x is (u1, x), right vertex
// |V(H)| + y is (u2, y).
Graph double_cover(const Graph& h, bool with_identity) {
  const int n = h.order();
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : h.edges()) {
    edges.emplace_back(e.u, n + e.v);
    edges.emplace_back(e.v, n + e.u);
  }
  if (with_identity) {
    for (Vertex x = 0; x < n; ++x) edges.emplace_back(x, n + x);
  }
  return Graph::build(2 * n, std::move(edges), "block(" + h.name() + ")");
}

struct Layout {
  int stride = 0;  // colors per unit of alpha
  int shift = 0;   // colors reserved below each block for H-fibers
};

// Colors every block of `product_graph`. Matching k of the block over a
// G-edge of color c gets (c - 1) * stride + shift + k + 1.
void color_blocks(const Graph& g, const EdgeColoring& alpha, const Graph& h,
                  const Graph& product_graph, const Graph& block,
                  const std::vector<std::vector<EdgeId>>& matchings,
                  const Layout& layout, EdgeColoring& out, BlockPlan& plan) {
  const int n = h.order();
  plan.blocks.assign(g.size(), Block{});
  const int g_edges = g.size();
#pragma omp parallel for schedule(static)
  for (int ge = 0; ge < g_edges; ++ge) {
    const Edge& e = g.edge(ge);
    const int c = alpha.colors[ge];
    Block& b = plan.blocks[ge];
    b.g_edge = ge;
    b.lo = (c - 1) * layout.stride + layout.shift + 1;
    b.hi = b.lo + static_cast<int>(matchings.size()) - 1;
    b.matchings.resize(matchings.size());
    for (std::size_t k = 0; k < matchings.size(); ++k) {
      for (EdgeId be : matchings[k]) {
        const Edge& pair = block.edge(be);
        const Vertex a = product_vertex(h, e.u, pair.u);
        const Vertex z = product_vertex(h, e.v, pair.v - n);
        const EdgeId pe = *product_graph.find_edge(a, z);
        out.colors[pe] = b.lo + static_cast<int>(k);
        b.matchings[k].push_back(pe);
      }
      std::sort(b.matchings[k].begin(), b.matchings[k].end());
    }
  }
}

// H-fiber edges over u get beta + (min_alpha(u) - 1) * stride.
void color_h_fibers(const Graph& g, const EdgeColoring& alpha, const Graph& h,
                    const EdgeColoring& beta, const Graph& product_graph,
                    int stride, EdgeColoring& out) {
  const Extremes ext = palette_extremes(g, alpha);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (EdgeId he = 0; he < h.size(); ++he) {
      const Edge& e = h.edge(he);
      const EdgeId pe = *product_graph.find_edge(product_vertex(h, u, e.u),
                                                 product_vertex(h, u, e.v));
      out.colors[pe] = beta.colors[he] + (ext.min[u] - 1) * stride;
    }
  }
}

}  // namespace

EdgeColoring round_robin(int n) {
  if (n < 1) throw Error("round_robin needs n >= 1");
  const Graph k = complete_graph(2 * n);
  const int m = 2 * n - 1;  // rotating vertices 0..m-1, vertex m fixed
  EdgeColoring c;
  c.colors.assign(k.size(), 0);
  for (int round = 0; round < m; ++round) {
    c.colors[*k.find_edge(round, m)] = round + 1;
    for (int s = 1; s < n; ++s) {
      const int a = (round + s) % m;
      const int b = (round - s + m) % m;
      c.colors[*k.find_edge(a, b)] = round + 1;
    }
  }
  c.declared_t = m;
  return c;
}

Construction combine_cartesian(const Graph& g, const EdgeColoring& alpha,
                               const Graph& h, const EdgeColoring& beta) {
  require_connected(g, "combine_cartesian");
  require_connected(h, "combine_cartesian");
  const int ta = require_interval(g, alpha, "combine_cartesian");
  const int tb = require_interval(h, beta, "combine_cartesian");
  const Extremes ea = palette_extremes(g, alpha);
  const Extremes eb = palette_extremes(h, beta);

  Construction out;
  out.graph = product(ProductKind::kCartesian, g, h);
  out.coloring.colors.assign(out.graph.size(), 0);
  for (EdgeId ge = 0; ge < g.size(); ++ge) {
    const Edge& e = g.edge(ge);
    for (Vertex v = 0; v < h.order(); ++v) {
      const EdgeId pe = *out.graph.find_edge(product_vertex(h, e.u, v),
                                             product_vertex(h, e.v, v));
      out.coloring.colors[pe] = alpha.colors[ge] + eb.min[v] - 1;
    }
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (EdgeId he = 0; he < h.size(); ++he) {
      const Edge& e = h.edge(he);
      const EdgeId pe = *out.graph.find_edge(product_vertex(h, u, e.u),
                                             product_vertex(h, u, e.v));
      out.coloring.colors[pe] = beta.colors[he] + ea.max[u];
    }
  }
  out.coloring.declared_t = ta + tb;
  return out;
}

Construction double_regular(const Graph& g, const EdgeColoring& alpha) {
  require_connected(g, "double_regular");
  const int r = require_regular(g, "double_regular");
  const int t = require_interval(g, alpha, "double_regular");
  const Extremes ea = palette_extremes(g, alpha);
  const Graph k2 = complete_graph(2);

  Construction out;
  out.graph = product(ProductKind::kCartesian, g, k2);
  out.coloring.colors.assign(out.graph.size(), 0);
  for (EdgeId ge = 0; ge < g.size(); ++ge) {
    const Edge& e = g.edge(ge);
    for (int copy = 0; copy < 2; ++copy) {
      const EdgeId pe = *out.graph.find_edge(product_vertex(k2, e.u, copy),
                                             product_vertex(k2, e.v, copy));
      out.coloring.colors[pe] = alpha.colors[ge] + copy * (r + 1);
    }
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    const EdgeId pe = *out.graph.find_edge(product_vertex(k2, u, 0),
                                           product_vertex(k2, u, 1));
    out.coloring.colors[pe] = ea.max[u] + 1;
  }
  out.coloring.declared_t = t + r + 1;
  return out;
}

Construction hypercube_max(int n) {
  if (n < 1) throw Error("hypercube_max needs n >= 1");
  Construction current{complete_graph(2), EdgeColoring{{1}, 1}, std::nullopt};
  for (int k = 1; k < n; ++k) current = double_regular(current.graph,
                                                       current.coloring);
  Graph cube = hypercube_graph(n);
  if (!(cube == current.graph)) {
    throw Error("hypercube_max: doubling chain diverged from Q_n labeling");
  }
  current.graph = std::move(cube);
  return current;
}

Construction tensor_blocks(const Graph& g, const EdgeColoring& alpha,
                           const Graph& h) {
  const int r = require_regular(h, "tensor_blocks");
  if (r < 1) throw Error("tensor_blocks: H must have edges");
  const int t = require_interval(g, alpha, "tensor_blocks");
  const Graph block = double_cover(h, false);
  const auto matchings = konig_decompose(block);

  Construction out;
  out.graph = product(ProductKind::kTensor, g, h);
  out.coloring.colors.assign(out.graph.size(), 0);
  out.plan.emplace();
  color_blocks(g, alpha, h, out.graph, block, matchings, Layout{r, 0},
               out.coloring, *out.plan);
  out.coloring.declared_t = t * r;
  return out;
}

Construction strong_tensor_blocks(const Graph& g, const EdgeColoring& alpha,
                                  const Graph& h) {
  const int r = require_regular(h, "strong_tensor_blocks");
  const int t = require_interval(g, alpha, "strong_tensor_blocks");
  const Graph block = double_cover(h, true);
  const auto matchings = konig_decompose(block);

  Construction out;
  out.graph = product(ProductKind::kStrongTensor, g, h);
  out.coloring.colors.assign(out.graph.size(), 0);
  out.plan.emplace();
  color_blocks(g, alpha, h, out.graph, block, matchings, Layout{r + 1, 0},
               out.coloring, *out.plan);
  out.coloring.declared_t = t * (r + 1);
  return out;
}

Construction strong_blocks(const Graph& g, const EdgeColoring& alpha,
                           const Graph& h, std::optional<EdgeColoring> beta) {
  require_connected(g, "strong_blocks");
  const int r = require_regular(h, "strong_blocks");
  const int t = require_interval(g, alpha, "strong_blocks");
  const EdgeColoring fiber =
      proper_regular_coloring(h, r, std::move(beta), "strong_blocks");
  const Graph block = double_cover(h, true);
  const auto matchings = konig_decompose(block);

  Construction out;
  out.graph = product(ProductKind::kStrong, g, h);
  out.coloring.colors.assign(out.graph.size(), 0);
  out.plan.emplace();
  color_blocks(g, alpha, h, out.graph, block, matchings, Layout{r + 1, r},
               out.coloring, *out.plan);
  color_h_fibers(g, alpha, h, fiber, out.graph, r + 1, out.coloring);
  out.coloring.declared_t = t * (r + 1) + r;
  return out;
}

Construction lex_blocks(const Graph& g, const EdgeColoring& alpha,
                        const Graph& h, std::optional<EdgeColoring> beta) {
  const int r = require_regular(h, "lex_blocks");
  const int t = require_interval(g, alpha, "lex_blocks");
  const int n = h.order();
  if (n < 1) throw Error("lex_blocks: H needs at least one vertex");
  const EdgeColoring fiber =
      proper_regular_coloring(h, r, std::move(beta), "lex_blocks");

  std::vector<std::pair<int, int>> edges;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) edges.emplace_back(x, n + y);
  }
  const Graph block = Graph::build(2 * n, std::move(edges), "K_{n,n}");
  std::vector<std::vector<EdgeId>> matchings(n);
  for (int k = 0; k < n; ++k) {
    for (Vertex x = 0; x < n; ++x) {
      matchings[k].push_back(*block.find_edge(x, n + (x + k) % n));
    }
  }

  Construction out;
  out.graph = product(ProductKind::kLexicographic, g, h);
  out.coloring.colors.assign(out.graph.size(), 0);
  out.plan.emplace();
  color_blocks(g, alpha, h, out.graph, block, matchings, Layout{n, r},
               out.coloring, *out.plan);
  color_h_fibers(g, alpha, h, fiber, out.graph, n, out.coloring);
  out.coloring.declared_t = t * n + r;
  return out;
}

}  // namespace icolor
