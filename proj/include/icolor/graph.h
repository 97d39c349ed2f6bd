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

#ifndef ICOLOR_GRAPH_H_
#define ICOLOR_GRAPH_H_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace icolor {

// Raised on any malformed input to the library (bad edges, bad parameters,
// violated preconditions). Callers that drive the library from files map it
// to a usage error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact search was asked to run on an instance above its configured size.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using Label = std::vector<int>;

// Immutable simple undirected graph on vertices 0..n-1.
//
// Edges are stored with u < v in strictly increasing lexicographic order.
// That order is the contract every EdgeColoring is aligned to: color i
// belongs to edges()[i].
class Graph {
 public:
  Graph() = default;

  // Canonicalizes `edges` (orients u < v, sorts). Throws Error on loops,
  // out-of-range endpoints, duplicate edges, or a label count that does not
  // match n.
  static Graph build(int n, std::vector<std::pair<int, int>> edges,
                     std::string name, std::vector<Label> labels = {});

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::string& name() const { return name_; }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Label>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }

  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  // Edge ids incident to v, ascending.
  std::span<const EdgeId> incident(Vertex v) const {
    return {incidence_.data() + offsets_[v],
            static_cast<std::size_t>(degree(v))};
  }
  Vertex other(EdgeId e, Vertex v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  // Id of edge {a,b}, if present.
  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

  Graph renamed(std::string name) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::string name_;
  std::vector<Label> labels_;
  std::vector<int> offsets_{0};
  std::vector<EdgeId> incidence_;
};

inline Graph build_graph(int n, std::vector<std::pair<int, int>> edges,
                         std::string name) {
  return Graph::build(n, std::move(edges), std::move(name));
}

struct GraphStats {
  std::vector<int> degrees;
  int max_degree = 0;
  // nullopt encodes an infinite diameter (disconnected graph).
  std::optional<int> diameter;
  bool bipartite = true;
  bool connected = true;
  std::optional<int> regular;
};

GraphStats stats(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
int max_degree(const Graph& g);
std::optional<int> regular_degree(const Graph& g);

// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// Side assignment (0/1) of a proper 2-coloring, or nullopt if g has an odd
// cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);

}  // namespace icolor

#endif  // ICOLOR_GRAPH_H_
