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

#include "icolor/coloring.h"

#include <algorithm>
#include <string>

namespace icolor {

int EdgeColoring::max_color() const {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

int EdgeColoring::min_color() const {
  return colors.empty() ? 0 : *std::min_element(colors.begin(), colors.end());
}

std::string_view violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNotProper:
      return "not_proper";
    case ViolationKind::kNotInterval:
      return "not_interval";
    case ViolationKind::kColorGap:
      return "color_gap";
    case ViolationKind::kMinNotOne:
      return "min_not_one";
  }
  return "?";
}

namespace {

void check_shape(const Graph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.size()) {
    throw Error("coloring has " + std::to_string(c.colors.size()) +
                " colors but graph has " + std::to_string(g.size()) +
                " edges");
  }
  for (int x : c.colors) {
    if (x < 1) throw Error("color " + std::to_string(x) + " is not positive");
  }
}

}  // namespace

Palette vertex_palette(const Graph& g, const EdgeColoring& c, Vertex v) {
  check_shape(g, c);
  if (v < 0 || v >= g.order()) throw Error("vertex out of range");
  Palette p;
  for (EdgeId e : g.incident(v)) p.colors.push_back(c.colors[e]);
  std::sort(p.colors.begin(), p.colors.end());
  const bool distinct =
      std::adjacent_find(p.colors.begin(), p.colors.end()) == p.colors.end();
  p.colors.erase(std::unique(p.colors.begin(), p.colors.end()),
                 p.colors.end());
  if (!p.colors.empty()) {
    p.min = p.colors.front();
    p.max = p.colors.back();
    p.interval = distinct && p.max - p.min + 1 == g.degree(v);
  }
  return p;
}

Verdict verify_interval(const Graph& g, const EdgeColoring& c) {
  check_shape(g, c);
  Verdict verdict;
  if (g.size() == 0) {
    verdict.violations.push_back({ViolationKind::kMinNotOne, 0});
    return verdict;
  }

  std::vector<int> incident;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) continue;
    incident.clear();
    for (EdgeId e : g.incident(v)) incident.push_back(c.colors[e]);
    std::sort(incident.begin(), incident.end());
    const bool proper =
        std::adjacent_find(incident.begin(), incident.end()) == incident.end();
    if (!proper) verdict.violations.push_back({ViolationKind::kNotProper, v});
    const int span = incident.back() - incident.front() + 1;
    if (!proper || span != g.degree(v)) {
      verdict.violations.push_back({ViolationKind::kNotInterval, v});
    }
  }

  const int lo = c.min_color();
  const int t = c.max_color();
  if (lo != 1) verdict.violations.push_back({ViolationKind::kMinNotOne, lo});
  std::vector<bool> used(t + 1, false);
  for (int x : c.colors) used[x] = true;
  for (int x = 1; x <= t; ++x) {
    if (!used[x]) verdict.violations.push_back({ViolationKind::kColorGap, x});
  }

  verdict.valid = verdict.violations.empty();
  verdict.t = t;
  return verdict;
}

EdgeColoring reverse_coloring(const EdgeColoring& c, int t) {
  EdgeColoring out;
  out.colors.reserve(c.colors.size());
  for (int x : c.colors) {
    if (x > t) {
      throw Error("color " + std::to_string(x) + " exceeds t=" +
                  std::to_string(t));
    }
    out.colors.push_back(t + 1 - x);
  }
  out.declared_t = t;
  return out;
}

}  // namespace icolor
