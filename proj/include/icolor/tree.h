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


#ifndef ICOLOR_TREE_H_
#define ICOLOR_TREE_H_

#include <vector>

#include "icolor/graph.h"

namespace icolor {

struct TreeParams {
  std::vector<Vertex> centers;   // minimum eccentricity
  std::vector<Vertex> pendants;  // degree one
  int m = 0;                     // max over centers u, pendants v of L(u, v)
  int M = 0;                     // max over pendant pairs of L(u, v)
};

bool is_tree(const Graph& t);

// Number of edges on the u-v path plus the edges leaving internal path
// vertices. Throws Error if `t` is not a tree, u == v, or a vertex is out of
// range.
int tree_L(const Graph& t, Vertex u, Vertex v);

// Throws Error if `t` is not a tree on at least two vertices.
TreeParams tree_params(const Graph& t);

}  // namespace icolor

#endif  // ICOLOR_TREE_H_
