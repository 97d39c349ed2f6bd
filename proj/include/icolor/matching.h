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

#ifndef ICOLOR_MATCHING_H_
#define ICOLOR_MATCHING_H_

#include <span>
#include <vector>

#include "icolor/graph.h"

namespace icolor {

// Maximum matching of a bipartite graph by Hopcroft-Karp, restricted to
// edges with usable[e] (all edges when `usable` is empty). `side` is a
// proper 2-coloring of g. Returns the matched edge ids, ascending.
std::vector<EdgeId> maximum_bipartite_matching(
    const Graph& g, std::span<const int> side,
    const std::vector<bool>& usable = {});

// Splits an r-regular bipartite graph into r perfect matchings by repeatedly
// extracting a perfect matching and deleting it. Deterministic for a given
// edge order. Throws Error when b is not bipartite or not regular.
std::vector<std::vector<EdgeId>> konig_decompose(const Graph& b);

}  // namespace icolor

#endif  // ICOLOR_MATCHING_H_
