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


// Independent reference implementations used as test oracles. They share no
// code with the library beyond the Graph container.

#ifndef ICOLOR_TESTS_ORACLES_H_
#define ICOLOR_TESTS_ORACLES_H_

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "icolor/graph.h"

namespace icolor::testing {

// Direct check of the interval t-coloring definition.
inline bool is_interval_coloring(const Graph& g, const std::vector<int>& c) {
  if (c.empty()) return false;
  const int t = *std::max_element(c.begin(), c.end());
  std::vector<bool> used(t + 1, false);
  for (int x : c) {
    if (x < 1) return false;
    used[x] = true;
  }
  for (int x = 1; x <= t; ++x) {
    if (!used[x]) return false;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<int> seen;
    for (std::size_t e = 0; e < c.size(); ++e) {
      if (g.edge(e).u == v || g.edge(e).v == v) seen.push_back(c[e]);
    }
    if (seen.empty()) continue;
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i) {
      if (seen[i] != seen[i - 1] + 1) return false;
    }
  }
  return true;
}

// Counts interval colorings with exactly t colors by enumerating all t^m
// assignments. Only for tiny graphs.
inline long long count_interval_colorings(const Graph& g, int t) {
  const int m = g.size();
  std::vector<int> c(m, 1);
  long long count = 0;
  while (true) {
    if (is_interval_coloring(g, c) &&
        *std::max_element(c.begin(), c.end()) == t) {
      ++count;
    }
    int i = 0;
    while (i < m && c[i] == t) c[i++] = 1;
    if (i == m) break;
    ++c[i];
  }
  return count;
}

// Maximum matching size by branching on the lowest unmatched vertex.
inline int brute_force_matching_number(const Graph& g) {
  std::vector<bool> used(g.order(), false);
  std::function<int(Vertex)> best = [&](Vertex from) -> int {
    while (from < g.order() && used[from]) ++from;
    if (from >= g.order()) return 0;
    used[from] = true;
    int result = best(from + 1);  // leave `from` unmatched
    for (EdgeId e : g.incident(from)) {
      const Vertex y = g.other(e, from);
      if (used[y]) continue;
      used[y] = true;
      result = std::max(result, 1 + best(from + 1));
      used[y] = false;
    }
    used[from] = false;
    return result;
  };
  return best(0);
}

// Isomorphism by trying all vertex permutations. Tiny graphs only.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::pair<int, int>> eb;
  for (const Edge& e : b.edges()) eb.insert({e.u, e.v});
  do {
    bool ok = true;
    for (const Edge& e : a.edges()) {
      int x = perm[e.u], y = perm[e.v];
      if (x > y) std::swap(x, y);
      if (!eb.contains({x, y})) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Random simple graph with edge probability p.
inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::build(n, std::move(edges), "random");
}

// Random tree from a uniformly random parent choice.
inline Graph random_tree(std::mt19937_64& rng, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  return Graph::build(n, std::move(edges), "tree");
}

// Same graph with vertices renamed by `perm`.
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph::build(g.order(), std::move(edges), g.name());
}

// L(u, v) from all simple u-v paths (exactly one in a tree).
inline int path_weight_by_enumeration(const Graph& t, Vertex u, Vertex v) {
  std::vector<Vertex> path{u};
  std::vector<bool> on(t.order(), false);
  on[u] = true;
  int result = -1;
  std::function<void(Vertex)> walk = [&](Vertex x) {
    if (x == v) {
      int hanging = 0;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        for (const Edge& e : t.edges()) {
          const bool touches = e.u == path[i] || e.v == path[i];
          const Vertex y = e.u == path[i] ? e.v : e.u;
          if (touches && !on[y]) ++hanging;
        }
      }
      result = static_cast<int>(path.size()) - 1 + hanging;
      return;
    }
    for (const Edge& e : t.edges()) {
      if (e.u != x && e.v != x) continue;
      const Vertex y = e.u == x ? e.v : e.u;
      if (on[y]) continue;
      on[y] = true;
      path.push_back(y);
      walk(y);
      path.pop_back();
      on[y] = false;
    }
  };
  walk(u);
  return result;
}

}  // namespace icolor::testing

#endif  // ICOLOR_TESTS_ORACLES_H_
