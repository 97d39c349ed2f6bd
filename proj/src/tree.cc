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


#include "icolor/tree.h"

#include <algorithm>
#include <string>

namespace icolor {
namespace {

void require_tree(const Graph& t) {
  if (!is_tree(t)) throw Error(t.name() + " is not a tree");
}

// Parent pointers of a BFS tree rooted at `root`.
std::vector<Vertex> parents(const Graph& t, Vertex root) {
  std::vector<Vertex> parent(t.order(), -1);
  std::vector<Vertex> queue{root};
  parent[root] = root;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Vertex x = queue[i];
    for (EdgeId e : t.incident(x)) {
      const Vertex y = t.other(e, x);
      if (parent[y] < 0) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  return parent;
}

int path_weight(const Graph& t, const std::vector<Vertex>& parent_of_u,
                Vertex u, Vertex v) {
  // Walk from v toward u; every internal vertex contributes its degree - 2
  // hanging edges.
  int length = 0, hanging = 0;
  for (Vertex x = v; x != u; x = parent_of_u[x]) {
    ++length;
    if (x != v) hanging += t.degree(x) - 2;
  }
  return length + hanging;
}

}  // namespace

bool is_tree(const Graph& t) {
  return t.order() >= 1 && t.size() == t.order() - 1 && is_connected(t);
}

int tree_L(const Graph& t, Vertex u, Vertex v) {
  require_tree(t);
  if (u < 0 || v < 0 || u >= t.order() || v >= t.order()) {
    throw Error("tree_L: vertex out of range");
  }
  if (u == v) throw Error("tree_L: endpoints must differ");
  return path_weight(t, parents(t, u), u, v);
}

TreeParams tree_params(const Graph& t) {
  require_tree(t);
  if (t.order() < 2) throw Error("tree_params: need at least two vertices");
  TreeParams p;
  std::vector<int> ecc(t.order());
  for (Vertex x = 0; x < t.order(); ++x) {
    auto d = bfs_distances(t, x);
    ecc[x] = *std::max_element(d.begin(), d.end());
    if (t.degree(x) == 1) p.pendants.push_back(x);
  }
  const int radius = *std::min_element(ecc.begin(), ecc.end());
  for (Vertex x = 0; x < t.order(); ++x) {
    if (ecc[x] == radius) p.centers.push_back(x);
  }
  for (Vertex u : p.centers) {
    auto parent = parents(t, u);
    for (Vertex v : p.pendants) {
      if (u != v) p.m = std::max(p.m, path_weight(t, parent, u, v));
    }
  }
  for (Vertex u : p.pendants) {
    auto parent = parents(t, u);
    for (Vertex v : p.pendants) {
      if (u < v) p.M = std::max(p.M, path_weight(t, parent, u, v));
    }
  }
  return p;
}

}  // namespace icolor
