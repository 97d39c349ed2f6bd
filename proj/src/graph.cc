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

#include "icolor/graph.h"

#include <algorithm>
#include <deque>
#include <string>

namespace icolor {

Graph Graph::build(int n, std::vector<std::pair<int, int>> edges,
                   std::string name, std::vector<Label> labels) {
  if (n < 0) throw Error("negative vertex count");
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw Error("label count " + std::to_string(labels.size()) +
                " does not match vertex count " + std::to_string(n));
  }
  Graph g;
  g.n_ = n;
  g.name_ = std::move(name);
  g.labels_ = std::move(labels);
  g.edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error("edge (" + std::to_string(a) + "," + std::to_string(b) +
                  ") has an endpoint out of range for n=" + std::to_string(n));
    }
    if (a == b) throw Error("loop edge at vertex " + std::to_string(a));
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw Error("duplicate edge (" + std::to_string(dup->u) + "," +
                std::to_string(dup->v) + ")");
  }

  std::vector<int> deg(n, 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.incidence_.assign(g.offsets_[n], 0);
  std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId i = 0; i < g.size(); ++i) {
    g.incidence_[fill[g.edges_[i].u]++] = i;
    g.incidence_[fill[g.edges_[i].v]++] = i;
  }
  return g;
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

Graph Graph::renamed(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident(x)) {
      Vertex y = g.other(e, x);
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident(x)) {
        Vertex y = g.other(e, x);
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::optional<int> regular_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int r = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != r) return std::nullopt;
  }
  return r;
}

GraphStats stats(const Graph& g) {
  GraphStats s;
  s.degrees.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) s.degrees[v] = g.degree(v);
  s.max_degree = max_degree(g);
  s.regular = regular_degree(g);
  s.bipartite = is_bipartite(g);

  int diameter = 0;
  s.connected = true;
  for (Vertex v = 0; v < g.order() && s.connected; ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d < 0) {
        s.connected = false;
        break;
      }
      diameter = std::max(diameter, d);
    }
  }
  if (s.connected) s.diameter = diameter;
  return s;
}

}  // namespace icolor
