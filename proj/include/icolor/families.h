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

#ifndef ICOLOR_FAMILIES_H_
#define ICOLOR_FAMILIES_H_

#include <optional>
#include <string_view>

#include "icolor/graph.h"

namespace icolor {

enum class Family {
  kPath,
  kCycle,
  kComplete,
  kHypercube,
  kStar,
  kEmpty,
  kPetersen,
  kSylvester,
};

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family kind);
bool family_takes_parameter(Family kind);

// Named graph families. `n` is ignored for kPetersen and kSylvester.
//   path(n)      P_n, n vertices
//   cycle(n)     C_n, n >= 3
//   complete(n)  K_n
//   hypercube(n) Q_n, vertices are bitmasks, adjacent iff one bit differs
//   star(n)      K_{1,n}, hub is vertex 0
//   empty(n)     nK_1
Graph family(Family kind, int n = 0);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph hypercube_graph(int n);
Graph star_graph(int n);
Graph empty_graph(int n);
Graph petersen_graph();

// The 16-vertex cubic graph without a perfect matching: a hub joined to
// three copies of K_4 with one edge subdivided, each attached at its
// subdivision vertex.
Graph sylvester_graph();

}  // namespace icolor

#endif  // ICOLOR_FAMILIES_H_
