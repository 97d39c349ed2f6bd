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

#ifndef ICOLOR_COLORING_H_
#define ICOLOR_COLORING_H_

#include <optional>
#include <string_view>
#include <vector>

#include "icolor/graph.h"

namespace icolor {

// Colors are positive integers, one per edge in the graph's canonical edge
// order.
struct EdgeColoring {
  std::vector<int> colors;
  std::optional<int> declared_t;

  int max_color() const;
  int min_color() const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

enum class ViolationKind {
  kNotProper,    // site: vertex with two equally colored incident edges
  kNotInterval,  // site: vertex whose palette is not d(v) consecutive colors
  kColorGap,     // site: color in 1..t used by no edge
  kMinNotOne,    // site: smallest color used
};

std::string_view violation_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  int site;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Verdict {
  bool valid = false;
  int t = 0;  // max color; meaningful when valid
  std::vector<Violation> violations;
};

// Checks every condition of an interval t-coloring and lists all failures:
// properness, per-vertex consecutiveness, minimum color 1, and every color
// 1..t used. Conditions are global, also for disconnected graphs. A graph
// without edges has no interval coloring. Throws Error on a length
// mismatch or a color below 1.
Verdict verify_interval(const Graph& g, const EdgeColoring& c);

struct Palette {
  std::vector<int> colors;  // distinct incident colors, ascending
  int min = 0;
  int max = 0;
  // Incident colors are pairwise distinct and consecutive. Vacuously true
  // for isolated vertices.
  bool interval = true;
};

Palette vertex_palette(const Graph& g, const EdgeColoring& c, Vertex v);

// x -> t + 1 - x. Throws Error if a color exceeds t.
EdgeColoring reverse_coloring(const EdgeColoring& c, int t);

}  // namespace icolor

#endif  // ICOLOR_COLORING_H_
