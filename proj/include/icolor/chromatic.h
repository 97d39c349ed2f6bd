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

#ifndef ICOLOR_CHROMATIC_H_
#define ICOLOR_CHROMATIC_H_

#include <cstdint>
#include <optional>

#include "icolor/budget.h"
#include "icolor/coloring.h"
#include "icolor/graph.h"

namespace icolor {

struct ProperColoringResult {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<EdgeColoring> coloring;  // set iff status == kFound
  std::uint64_t nodes = 0;
};

struct ProperSearchOptions {
  // When set, the search runs as a series of complete restarts with
  // geometrically growing node limits; restart i > 0 breaks branching ties
  // with an order shuffled by a generator seeded from (seed, i). Any run that
  // finishes under its limit is conclusive, so the answer stays exact.
  std::optional<std::uint64_t> restart_seed;
  std::uint64_t initial_node_limit = 1000;
};

// Exhaustive search for a proper edge coloring with colors 1..k (k <= 64).
// Branches on the edge with the fewest free colors and only opens one new
// color per node, since unused colors are interchangeable.
ProperColoringResult find_proper_coloring(
    const Graph& g, int k, const Budget& budget = {},
    const ProperSearchOptions& options = {});

inline constexpr int kChromaticIndexMaxEdges = 64;

// Exact chromatic index; always Delta or Delta + 1. Throws SizeGuardError
// when g has more than `max_edges` edges.
int chromatic_index(const Graph& g, int max_edges = kChromaticIndexMaxEdges);

}  // namespace icolor

#endif  // ICOLOR_CHROMATIC_H_
